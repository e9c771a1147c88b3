#include <CLI11.hpp>

#include "groth/grothendieck.hpp"
#include "groth/identities.hpp"
#include "groth/permutation.hpp"
#include "groth/polynomial.hpp"
#include "groth/tableau.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace groth;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int default_workers() {
  const char* env = std::getenv("GROTH_WORKERS");
  if (!env) return 1;
  try {
    const int v = std::stoi(env);
    if (v >= 1) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "ignoring GROTH_WORKERS=\"" << env << "\": not a positive integer\n";
  return 1;
}

int cmd_compute(const std::string& perm_text, const std::string& method,
                const std::string& format) {
  const Permutation w = Permutation::parse(perm_text);
  Polynomial p = Polynomial::one(w.size());
  if (method == "divided")
    p = groth_divided(w);
  else if (method == "tableau")
    p = tableau_formula(w).poly;
  else
    p = grassmannian_formula(w).poly;

  if (format == "text")
    std::cout << to_text(p) << '\n';
  else if (format == "json")
    std::cout << to_json_string(p) << '\n';
  else
    std::cout << to_latex(p) << '\n';
  return 0;
}

int cmd_tableaux(const std::string& perm_text, const std::string& format) {
  const Permutation w = Permutation::parse(perm_text);
  if (!w.is_321_avoiding())
    throw std::invalid_argument("permutation " + w.to_string() + " contains a descending triple");

  std::uint64_t count = 0;
  if (w.is_identity()) {
    // Empty diagram, one empty filling.
    count = 1;
    if (format == "json") std::cout << "{\"boxes\":[]}\n";
  } else {
    const SkewShape shape = skew_shape(w);
    bool first = true;
    for_each_svt(shape, [&](const SetValuedTableau& t) {
      ++count;
      if (format == "json") {
        std::cout << tableau_to_json(shape, t) << '\n';
      } else {
        if (!first) std::cout << '\n';
        std::cout << tableau_to_text(shape, t);
      }
      first = false;
    });
    if (format == "text" && count > 0) std::cout << '\n';
  }
  if (format == "json")
    std::cout << "{\"count\":" << count << "}\n";
  else
    std::cout << "count=" << count << '\n';
  return 0;
}

int cmd_verify(const std::optional<std::string>& perm_text, std::optional<int> n, int workers,
               const std::string& format) {
  std::vector<Permutation> todo;
  if (perm_text) {
    todo.push_back(Permutation::parse(*perm_text));
    if (!todo.back().is_321_avoiding())
      throw std::invalid_argument("permutation " + todo.back().to_string() +
                                  " contains a descending triple");
  } else {
    if (*n < 1) throw std::invalid_argument("ring size must be positive");
    todo = all_321_avoiding(*n);
  }

  std::vector<std::string> lines(todo.size());
  std::atomic<std::uint64_t> failed{0};

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const VerificationReport r = verify_theorem(todo[k]);
      if (!r.equal) failed.fetch_add(1, std::memory_order_relaxed);
      lines[k] = (format == "json") ? report_to_json(r, /*include_polynomial=*/false)
                                    : report_to_text(r);
    }
  };

  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), todo.size());
  if (w <= 1) {
    run_range(0, todo.size());
  } else {
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t t = 0; t < w; ++t)
      pool.emplace_back(run_range, todo.size() * t / w, todo.size() * (t + 1) / w);
    for (auto& th : pool) th.join();
  }

  for (const auto& line : lines) std::cout << line << '\n';
  std::cout << "checked=" << todo.size() << " failed=" << failed.load() << '\n';
  return failed.load() == 0 ? 0 : kExitMismatch;
}

struct Suite {
  std::string name;
  std::uint64_t cases = 0;
  bool passed = true;
};

int cmd_identities(std::uint64_t seed) {
  std::vector<Suite> suites;
  auto run = [&suites](const std::string& name, auto&& body) {
    Suite s{name};
    body(s);
    suites.push_back(std::move(s));
  };

  const int kCases = 100;
  const int n = 4, deg = 4, terms = 5;

  // Each suite draws from its own generator so one suite cannot perturb the
  // inputs of another.
  auto fresh = [seed](std::uint64_t salt) { return std::mt19937_64(seed + salt); };
  auto draw_i = [](std::mt19937_64& rng) { return 1 + static_cast<int>(rng() % 3); };

  run("defining-quotient", [&](Suite& s) {
    auto rng = fresh(1);
    for (int c = 0; c < kCases; ++c, ++s.cases)
      s.passed = s.passed && check_exactness(random_polynomial(rng, n, deg, terms), draw_i(rng));
  });
  run("product-rule", [&](Suite& s) {
    auto rng = fresh(2);
    for (int c = 0; c < kCases; ++c, ++s.cases) {
      const Polynomial p = random_polynomial(rng, n, deg, terms);
      const Polynomial q = random_polynomial(rng, n, deg, terms);
      s.passed = s.passed && check_leibniz(p, q, draw_i(rng));
    }
  });
  run("symmetric-collapse", [&](Suite& s) {
    auto rng = fresh(3);
    for (int c = 0; c < kCases; ++c, ++s.cases)
      s.passed =
          s.passed && check_symmetric_collapse(random_polynomial(rng, n, deg, terms), draw_i(rng));
  });
  run("symmetric-factor", [&](Suite& s) {
    auto rng = fresh(4);
    for (int c = 0; c < kCases; ++c, ++s.cases) {
      const Polynomial p = random_polynomial(rng, n, deg, terms);
      const Polynomial q = random_polynomial(rng, n, deg, terms);
      s.passed = s.passed && check_symmetric_factor(p, q, draw_i(rng));
    }
  });
  run("power-rule", [&](Suite& s) {
    auto rng = fresh(5);
    for (int k = 0; k <= 5; ++k)
      for (int c = 0; c < kCases; ++c, ++s.cases)
        s.passed =
            s.passed && check_power_rule(random_polynomial(rng, n, deg, terms), draw_i(rng), k);
  });
  run("double-application", [&](Suite& s) {
    auto rng = fresh(6);
    for (int c = 0; c < kCases; ++c, ++s.cases)
      s.passed =
          s.passed && check_double_application(random_polynomial(rng, n, deg, terms), draw_i(rng));
  });
  run("distant-commutation", [&](Suite& s) {
    auto rng = fresh(7);
    for (int c = 0; c < kCases; ++c, ++s.cases)
      s.passed =
          s.passed && check_distant_commutation(random_polynomial(rng, n, deg, terms), 1, 3);
  });
  run("braid-relation", [&](Suite& s) {
    auto rng = fresh(8);
    for (int c = 0; c < kCases; ++c, ++s.cases) {
      const int i = 1 + static_cast<int>(rng() % 2);
      s.passed = s.passed && check_braid(random_polynomial(rng, n, deg, terms), i);
    }
  });
  run("product-expansion", [&](Suite& s) {
    for (int k = 1; k <= 5; ++k) {
      std::vector<int> ell;
      for (int l = 1; l <= k; ++l) ell.push_back(l);
      for (int i : {1, 2}) {
        s.passed = s.passed && check_product_expansion(i, ell);
        ++s.cases;
      }
    }
    auto rng = fresh(9);
    for (int c = 0; c < kCases; ++c, ++s.cases) {
      const int i = 1 + static_cast<int>(rng() % 3);
      std::vector<int> ell(1 + rng() % 4);
      for (auto& l : ell) l = 1 + static_cast<int>(rng() % 5);
      s.passed = s.passed && check_product_expansion(i, ell);
    }
  });
  run("tableau-recursion", [&](Suite& s) {
    for (int m = 2; m <= 5; ++m)
      for (const Permutation& w : all_321_avoiding(m)) {
        if (w.is_identity()) continue;
        const auto fs = flag_sequences(w);
        const int r = static_cast<int>(fs.f.size());
        for (int i = 1; i <= r; ++i) {
          const int next_f = (i < r) ? fs.f[i] : m + 1;
          if (fs.f[i - 1] + 1 >= next_f || w(fs.f[i - 1]) <= fs.f[i - 1] + 1) continue;
          s.passed = s.passed && check_tableau_recursion(w, i);
          ++s.cases;
        }
      }
  });

  bool all = true;
  for (const Suite& s : suites) {
    all = all && s.passed;
    std::cout << (s.passed ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.cases << " cases)\n";
  }
  std::cout << (all ? "all identity suites passed" : "identity suite failures detected") << '\n';
  return all ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double Grothendieck polynomials: compute, enumerate, verify"};
  app.require_subcommand(1);

  std::string perm_text, method = "divided", format = "text";
  std::optional<std::string> verify_perm;
  std::optional<int> verify_n;
  int workers = default_workers();
  std::uint64_t seed = 12345;

  auto* compute = app.add_subcommand("compute", "print the polynomial of a permutation");
  compute->add_option("--perm", perm_text, "one-line notation, e.g. 3,1,2,5,4")->required();
  compute->add_option("--method", method, "divided | tableau | grassmannian")
      ->check(CLI::IsMember({"divided", "tableau", "grassmannian"}));
  compute->add_option("--format", format, "text | json | latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  auto* tableaux = app.add_subcommand("tableaux", "list the set-valued tableaux of a permutation");
  tableaux->add_option("--perm", perm_text, "one-line notation")->required();
  tableaux->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "compare both pipelines");
  verify->add_option("--perm", verify_perm, "single permutation to verify");
  verify->add_option("--n", verify_n, "verify every 321-avoiding permutation of S_n");
  verify->add_option("--parallel", workers, "worker thread count")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* identities = app.add_subcommand("identities", "run the operator identity suites");
  identities->add_option("--seed", seed, "seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(perm_text, method, format);
    if (tableaux->parsed()) return cmd_tableaux(perm_text, format);
    if (verify->parsed()) {
      if (verify_perm.has_value() == verify_n.has_value())
        throw std::invalid_argument("verify needs exactly one of --perm and --n");
      return cmd_verify(verify_perm, verify_n, workers, format);
    }
    return cmd_identities(seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
