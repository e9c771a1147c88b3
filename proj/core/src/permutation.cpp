#include "groth/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace groth {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  const int n = static_cast<int>(w_.size());
  if (n == 0) throw std::invalid_argument("permutation must have at least one entry");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": value " +
                                  std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": value " +
                                  std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
  const auto last = text.find_last_not_of(" \t");
  if (last != std::string::npos && text[last] == ',')
    throw std::invalid_argument("empty entry in permutation \"" + text + "\"");
  std::vector<int> vals;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto from = token.find_first_not_of(" \t");
    const auto to = token.find_last_not_of(" \t");
    if (from == std::string::npos)
      throw std::invalid_argument("empty entry in permutation \"" + text + "\"");
    token = token.substr(from, to - from + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot read \"" + token + "\" as a permutation entry");
    }
    if (used != token.size())
      throw std::invalid_argument("cannot read \"" + token + "\" as a permutation entry");
    vals.push_back(v);
  }
  if (vals.empty()) throw std::invalid_argument("permutation text is empty");
  return Permutation(std::move(vals));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w_[k]);
  }
  return out;
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("position " + std::to_string(i) + " outside 1.." +
                            std::to_string(size()));
  return w_[static_cast<std::size_t>(i - 1)];
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

bool Permutation::is_321_avoiding() const {
  // mid_best tracks the largest w(j) that already has a larger value before it;
  // any later smaller value completes a descending triple.
  int prefix_max = 0, mid_best = 0;
  for (int v : w_) {
    if (v < mid_best) return false;
    if (v < prefix_max && v > mid_best) mid_best = v;
    if (v > prefix_max) prefix_max = v;
  }
  return true;
}

Permutation Permutation::right_multiply(int i) const {
  if (i < 1 || i + 1 > size())
    throw std::out_of_range("transposition position " + std::to_string(i) + " outside 1.." +
                            std::to_string(size() - 1));
  std::vector<int> v = w_;
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return Permutation(std::move(v));
}

FlagSequences flag_sequences(const Permutation& w) {
  if (!w.is_321_avoiding())
    throw std::invalid_argument("permutation " + w.to_string() + " contains a descending triple");
  FlagSequences out;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) > i) {
      out.f.push_back(i);
      out.h.push_back(w(i));
    } else {
      out.f_complement.push_back(i);
      out.h_complement.push_back(w(i));
    }
  }
  return out;
}

SkewShape skew_shape(const Permutation& w) {
  const FlagSequences fs = flag_sequences(w);
  if (fs.f.empty())
    throw std::invalid_argument("identity permutation has an empty diagram; its polynomial is 1");
  const int r = static_cast<int>(fs.f.size());
  const int top = fs.h.back() - r;  // w(f_r) - r
  std::vector<int> lambda, mu;
  for (int i = 1; i <= r; ++i) {
    lambda.push_back(top - (fs.f[static_cast<std::size_t>(i - 1)] - i));
    mu.push_back(top - (fs.h[static_cast<std::size_t>(i - 1)] - i));
  }
  return SkewShape(std::move(lambda), std::move(mu), fs.f);
}

PrimedShape shape_prime(const Permutation& w) {
  const FlagSequences fs = flag_sequences(w);
  if (fs.f.empty())
    throw std::invalid_argument("identity permutation has an empty diagram; its polynomial is 1");
  const int r = static_cast<int>(fs.f.size());
  PrimedShape out;
  for (int i = 1; i <= r; ++i) {
    out.lambda.push_back(fs.h[static_cast<std::size_t>(r - i)] - (r + 1 - i));
    out.mu.push_back(fs.f[static_cast<std::size_t>(r - i)] - (r + 1 - i));
  }
  return out;
}

std::optional<GrassmannianData> grassmannian_data(const Permutation& w) {
  if (w.is_identity()) return std::nullopt;
  int descent = 0;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {
      if (descent != 0) return std::nullopt;
      descent = i;
    }
  }
  const FlagSequences fs = flag_sequences(w);
  const int r = static_cast<int>(fs.f.size());
  const int shift = fs.f.front() - 1;
  // One descent forces the ascent positions to run consecutively up to it.
  for (int i = 0; i < r; ++i)
    if (fs.f[static_cast<std::size_t>(i)] != shift + i + 1)
      throw std::logic_error("ascent positions of a one-descent permutation must be consecutive");
  if (fs.f.back() != descent)
    throw std::logic_error("ascent run of a one-descent permutation must end at the descent");
  GrassmannianData out;
  out.descent = descent;
  for (int i = 1; i <= r; ++i)
    out.lambda.push_back(fs.h[static_cast<std::size_t>(r - i)] - (r + 1 - i) - shift);
  out.flag.assign(static_cast<std::size_t>(r), descent);
  return out;
}

std::vector<int> ascent_path_to_longest(const Permutation& w, AscentRule rule) {
  std::vector<int> path;
  Permutation u = w;
  for (;;) {
    int pick = 0;
    for (int i = 1; i < u.size(); ++i) {
      if (u(i) < u(i + 1)) {
        pick = i;
        if (rule == AscentRule::smallest) break;
      }
    }
    if (pick == 0) break;
    path.push_back(pick);
    u = u.right_multiply(pick);
  }
  return path;
}

FlagGrowthStep flag_growth_step(const Permutation& w, int i) {
  const FlagSequences fs = flag_sequences(w);
  const int r = static_cast<int>(fs.f.size());
  if (r == 0) throw std::invalid_argument("identity permutation admits no flag growth step");
  if (i < 1 || i > r)
    throw std::out_of_range("row index " + std::to_string(i) + " outside 1.." +
                            std::to_string(r));
  const int t = fs.f[static_cast<std::size_t>(i - 1)];
  const int next_f = i < r ? fs.f[static_cast<std::size_t>(i)] : w.size() + 1;
  if (t + 1 >= next_f)
    throw std::invalid_argument("flag entry " + std::to_string(i) +
                                " has no room to grow: position " + std::to_string(t + 1) +
                                " is already an ascent position");
  if (w(t) <= t + 1)
    throw std::invalid_argument("flag entry " + std::to_string(i) + " cannot grow: w(" +
                                std::to_string(t) + ") = " + std::to_string(w(t)) +
                                " is too small");

  // Everything below is forced; failures would mean the construction is wrong.
  Permutation next = w.right_multiply(t);
  if (!next.is_321_avoiding())
    throw std::logic_error("flag growth step left the 321-avoiding class");
  const SkewShape before = skew_shape(w);
  SkewShape next_shape = skew_shape(next);
  const FlagSequences after = flag_sequences(next);
  FlagGrowthStep out{std::move(next), std::move(next_shape)};
  std::vector<int> expect_f = fs.f;
  expect_f[static_cast<std::size_t>(i - 1)] += 1;
  std::vector<int> expect_lambda = before.lambda();
  expect_lambda[static_cast<std::size_t>(i - 1)] -= 1;
  if (after.f != expect_f || after.h != fs.h)
    throw std::logic_error("flag growth step must bump f_i and fix h");
  if (out.shape.lambda() != expect_lambda || out.shape.mu() != before.mu())
    throw std::logic_error("flag growth step must trim one box from row i and fix mu");
  if (w.length() != out.next.length() + 1)
    throw std::logic_error("flag growth step must lower the length by one");
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  if (n > 10) throw std::invalid_argument("refusing to materialize S_n beyond n = 10");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> all_321_avoiding(int n) {
  std::vector<Permutation> out;
  for (Permutation& w : all_permutations(n))
    if (w.is_321_avoiding()) out.push_back(std::move(w));
  return out;
}

}  // namespace groth
