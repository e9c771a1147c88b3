#include "groth/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace groth {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring_size() != b.ring_size())
    throw std::invalid_argument("ring size mismatch: " + std::to_string(a.ring_size()) +
                                " vs " + std::to_string(b.ring_size()));
}

void require_ring_size(int n) {
  if (n < 1) throw std::invalid_argument("ring size must be positive, got " + std::to_string(n));
}

void require_var_index(int n, int i, const char* family) {
  if (i < 1 || i > n)
    throw std::out_of_range(std::string(family) + " index " + std::to_string(i) +
                            " outside ring of size " + std::to_string(n));
}

void require_adjacent_index(int n, int i) {
  if (i < 1 || i + 1 > n)
    throw std::out_of_range("adjacent-pair index " + std::to_string(i) +
                            " outside ring of size " + std::to_string(n));
}

using Accumulator = std::unordered_map<Monomial, Int, MonomialHash>;

Polynomial collect(int n, Accumulator&& acc) {
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) ts.push_back(Term{m, std::move(c)});
  return Polynomial::from_terms(n, std::move(ts));
}

}  // namespace

std::size_t Monomial::xslot(int i) const {
  require_var_index(n_, i, "x");
  return static_cast<std::size_t>(i);
}

std::size_t Monomial::bslot(int j) const {
  require_var_index(n_, j, "b");
  return static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (std::size_t k = 1; k < e_.size(); ++k) d += e_[k];
  return d;
}

Monomial Monomial::product(const Monomial& a, const Monomial& b) {
  if (a.n_ != b.n_)
    throw std::invalid_argument("ring size mismatch: " + std::to_string(a.n_) + " vs " +
                                std::to_string(b.n_));
  Monomial out = a;
  for (std::size_t k = 0; k < out.e_.size(); ++k) out.e_[k] += b.e_[k];
  return out;
}

bool Monomial::canonical_less(const Monomial& a, const Monomial& b) {
  if (a.e_[0] != b.e_[0]) return a.e_[0] < b.e_[0];
  for (std::size_t k = 1; k < a.e_.size(); ++k)
    if (a.e_[k] != b.e_[k]) return a.e_[k] > b.e_[k];
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : m.raw()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Polynomial::Polynomial(int n) : n_(n) { require_ring_size(n); }

Polynomial Polynomial::constant(int n, Int c) {
  Polynomial p(n);
  if (c != 0) p.terms_.push_back(Term{Monomial(n), std::move(c)});
  return p;
}

Polynomial Polynomial::x(int n, int i) {
  Polynomial p(n);
  Monomial m(n);
  m.set_x(i, 1);
  p.terms_.push_back(Term{std::move(m), 1});
  return p;
}

Polynomial Polynomial::b(int n, int j) {
  Polynomial p(n);
  Monomial m(n);
  m.set_b(j, 1);
  p.terms_.push_back(Term{std::move(m), 1});
  return p;
}

Polynomial Polynomial::beta(int n) {
  Polynomial p(n);
  Monomial m(n);
  m.set_beta(1);
  p.terms_.push_back(Term{std::move(m), 1});
  return p;
}

Polynomial Polynomial::from_terms(int n, std::vector<Term> terms) {
  Polynomial p(n);
  for (const Term& t : terms)
    if (t.mono.ring_size() != n)
      throw std::invalid_argument("term ring size " + std::to_string(t.mono.ring_size()) +
                                  " does not match polynomial ring " + std::to_string(n));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return Monomial::canonical_less(a.mono, b.mono); });
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(n_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back(Term{t.mono, -t.coeff});
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_ring(*this, o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].mono == o.terms_[j].mono) {
      Int c = terms_[i].coeff + o.terms_[j].coeff;
      if (c != 0) merged.push_back(Term{terms_[i].mono, std::move(c)});
      ++i, ++j;
    } else if (Monomial::canonical_less(terms_[i].mono, o.terms_[j].mono)) {
      merged.push_back(std::move(terms_[i++]));
    } else {
      merged.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
  while (j < o.terms_.size()) merged.push_back(o.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.ring_size());
  const Polynomial& outer = a.term_count() <= b.term_count() ? a : b;
  const Polynomial& inner = a.term_count() <= b.term_count() ? b : a;
  Accumulator acc;
  acc.reserve(inner.term_count() * 2);
  for (const Term& s : outer.terms())
    for (const Term& t : inner.terms()) acc[Monomial::product(s.mono, t.mono)] += s.coeff * t.coeff;
  return collect(a.ring_size(), std::move(acc));
}

Polynomial oplus(const Polynomial& u, const Polynomial& v) {
  require_same_ring(u, v);
  return u + v + Polynomial::beta(u.ring_size()) * u * v;
}

Polynomial swap_adjacent(const Polynomial& p, int i) {
  require_adjacent_index(p.ring_size(), i);
  std::vector<Term> ts;
  ts.reserve(p.term_count());
  for (const Term& t : p.terms()) {
    Monomial m = t.mono;
    std::uint32_t a = m.x(i);
    m.set_x(i, m.x(i + 1));
    m.set_x(i + 1, a);
    ts.push_back(Term{std::move(m), t.coeff});
  }
  return Polynomial::from_terms(p.ring_size(), std::move(ts));
}

Polynomial divided_difference(const Polynomial& p, int i) {
  require_adjacent_index(p.ring_size(), i);
  Accumulator acc;
  acc.reserve(p.term_count() * 3 + 8);

  // Classical single-monomial divided difference: (m - s_i(m)) / (x_i - x_{i+1})
  // telescopes into |a - c| monomials where a, c are the x_i, x_{i+1} exponents.
  auto telescope = [&acc, i](const Monomial& m, const Int& coeff) {
    const std::uint32_t a = m.x(i), c = m.x(i + 1);
    if (a == c) return;
    Monomial out = m;
    const std::uint32_t lo = std::min(a, c), hi = std::max(a, c);
    for (std::uint32_t e = lo; e < hi; ++e) {
      out.set_x(i, e);
      out.set_x(i + 1, a + c - 1 - e);
      if (a > c)
        acc[out] += coeff;
      else
        acc[out] -= coeff;
    }
  };

  // pi_i(f) = classical operator applied to (1 + beta x_{i+1}) f.
  for (const Term& t : p.terms()) {
    telescope(t.mono, t.coeff);
    Monomial m = t.mono;
    m.set_beta(m.beta() + 1);
    m.set_x(i + 1, m.x(i + 1) + 1);
    telescope(m, t.coeff);
  }
  return collect(p.ring_size(), std::move(acc));
}

Polynomial specialize(const Polynomial& p, std::optional<std::int64_t> beta_value, bool kill_b,
                      bool kill_x) {
  const int n = p.ring_size();
  std::vector<Term> ts;
  for (const Term& t : p.terms()) {
    bool drop = false;
    for (int k = 1; k <= n && !drop; ++k) {
      if (kill_x && t.mono.x(k) > 0) drop = true;
      if (kill_b && t.mono.b(k) > 0) drop = true;
    }
    if (drop) continue;
    Term out = t;
    if (beta_value) {
      out.coeff *= boost::multiprecision::pow(Int(*beta_value), out.mono.beta());
      out.mono.set_beta(0);
    }
    if (out.coeff != 0) ts.push_back(std::move(out));
  }
  return Polynomial::from_terms(n, std::move(ts));
}

namespace {

std::string render(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool neg = t.coeff < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const Int mag = neg ? Int(-t.coeff) : t.coeff;

    std::vector<std::string> factors;
    auto power = [latex](std::string base, std::uint32_t e) {
      if (e == 1) return base;
      return latex ? base + "^{" + std::to_string(e) + "}" : base + "^" + std::to_string(e);
    };
    if (t.mono.beta() > 0) factors.push_back(power(latex ? "\\beta" : "B", t.mono.beta()));
    for (int i = 1; i <= p.ring_size(); ++i)
      if (t.mono.x(i) > 0)
        factors.push_back(power(latex ? "x_{" + std::to_string(i) + "}" : "x" + std::to_string(i),
                                t.mono.x(i)));
    for (int j = 1; j <= p.ring_size(); ++j)
      if (t.mono.b(j) > 0)
        factors.push_back(power(latex ? "b_{" + std::to_string(j) + "}" : "b" + std::to_string(j),
                                t.mono.b(j)));

    if (factors.empty()) {
      out += mag.str();
      continue;
    }
    std::string joined;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) joined += latex ? " " : "*";
      joined += factors[k];
    }
    if (mag == 1)
      out += joined;
    else
      out += mag.str() + (latex ? " " : "*") + joined;
  }
  return out;
}

}  // namespace

std::string to_text(const Polynomial& p) { return render(p, false); }

std::string to_latex(const Polynomial& p) { return render(p, true); }

std::string to_json_string(const Polynomial& p) {
  nlohmann::ordered_json j;
  j["n"] = p.ring_size();
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const Term& t : p.terms()) {
    nlohmann::ordered_json o;
    o["coeff"] = t.coeff.str();
    o["beta"] = t.mono.beta();
    std::vector<std::uint32_t> xs, bs;
    for (int i = 1; i <= p.ring_size(); ++i) xs.push_back(t.mono.x(i));
    for (int j2 = 1; j2 <= p.ring_size(); ++j2) bs.push_back(t.mono.b(j2));
    o["x"] = xs;
    o["b"] = bs;
    terms.push_back(std::move(o));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

Polynomial polynomial_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("polynomial JSON parse failure: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("terms") ||
      !j["n"].is_number_integer() || !j["terms"].is_array())
    throw std::invalid_argument("polynomial JSON must be {\"n\": int, \"terms\": [...]}");
  const int n = j["n"].get<int>();
  require_ring_size(n);
  std::vector<Term> ts;
  for (const auto& o : j["terms"]) {
    if (!o.is_object() || !o.contains("coeff") || !o.contains("beta") || !o.contains("x") ||
        !o.contains("b"))
      throw std::invalid_argument("polynomial JSON term missing coeff/beta/x/b");
    Int c;
    try {
      c = o["coeff"].is_string() ? Int(o["coeff"].get<std::string>())
                                 : Int(o["coeff"].get<std::int64_t>());
    } catch (const std::exception&) {
      throw std::invalid_argument("polynomial JSON coefficient is not a decimal integer");
    }
    Monomial m(n);
    if (!o["beta"].is_number_integer() || o["beta"].get<std::int64_t>() < 0)
      throw std::invalid_argument("polynomial JSON beta exponent must be a nonnegative integer");
    m.set_beta(o["beta"].get<std::uint32_t>());
    auto read_block = [&](const char* key, auto setter) {
      const auto& arr = o[key];
      if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument(std::string("polynomial JSON ") + key +
                                    " block must list exactly n exponents");
      for (int k = 1; k <= n; ++k) {
        const auto& v = arr[static_cast<std::size_t>(k - 1)];
        if (!v.is_number_integer() || v.template get<std::int64_t>() < 0)
          throw std::invalid_argument("polynomial JSON exponents must be nonnegative integers");
        setter(k, v.template get<std::uint32_t>());
      }
    };
    read_block("x", [&m](int k, std::uint32_t v) { m.set_x(k, v); });
    read_block("b", [&m](int k, std::uint32_t v) { m.set_b(k, v); });
    ts.push_back(Term{std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(n, std::move(ts));
}

}  // namespace groth
