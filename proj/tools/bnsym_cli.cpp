// bnsym: command-line front end for signed-permutation statistics, descent
// monomials, averaging, straightening and Hilbert-series verification.

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bnsym/bnsym.hpp"
#include "bnsym/io.hpp"

namespace {

using bnsym::io::json;

struct Config {
  std::size_t max_rank_guard = 3; // straighten and rank suites
  int truncation_degree = 12;
  std::string output_format = "text";

  bool json_output() const { return output_format == "json"; }
};

std::string join(const std::vector<int>& v, const char* open, const char* close) {
  std::string s = open;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(v[i]);
  }
  return s + close;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size())
        throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw bnsym::ParseError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

json read_stdin_json() {
  const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw bnsym::ParseError(std::string("input is not valid JSON: ") + e.what());
  }
}

int cmd_stats(const Config& cfg, const std::string& window) {
  const auto s = bnsym::parse_window(window);
  const auto st = bnsym::statistics(s);
  const auto inv = bnsym::inverse(s);
  if (cfg.json_output()) {
    json j = bnsym::io::to_json(st);
    j["sigma"] = bnsym::io::to_json(s);
    j["inverse"] = bnsym::io::to_json(inv);
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "sigma    " << s.to_string() << '\n'
            << "inverse  " << inv.to_string() << '\n'
            << "Des      " << join(st.descent_set, "{", "}") << '\n'
            << "d        " << join(st.d, "(", ")") << '\n'
            << "eps      " << join(st.eps, "(", ")") << '\n'
            << "f        " << join(st.f, "(", ")") << '\n'
            << "maj      " << st.maj << '\n'
            << "neg      " << st.neg << '\n'
            << "fmaj     " << st.fmaj << '\n';
  return 0;
}

int cmd_monomial(const Config& cfg, const std::string& kind, const std::string& window) {
  const auto s = bnsym::parse_window(window);
  bnsym::Monomial m(s.rank());
  if (kind == "a")
    m = bnsym::descent_monomial_a(s);
  else if (kind == "b")
    m = bnsym::signed_descent_monomial_b(s);
  else if (kind == "e")
    m = bnsym::diagonal_descent_monomial_e(s);
  else if (kind == "c")
    m = bnsym::diagonal_signed_descent_monomial_c(s);
  else
    throw bnsym::DomainError("unknown monomial kind '" + kind + "' (expected a, b, e or c)");
  if (cfg.json_output())
    std::cout << bnsym::io::to_json(bnsym::Polynomial(m)).dump() << '\n';
  else
    std::cout << m.to_string() << '\n';
  return 0;
}

int cmd_rho(const Config& cfg, const std::string& xs, const std::string& ys) {
  bnsym::Polynomial input(1);
  if (xs.empty() && ys.empty()) {
    input = bnsym::io::polynomial_from_json(read_stdin_json());
  } else {
    auto p = parse_int_list(xs);
    auto q = parse_int_list(ys);
    if (p.empty())
      p.assign(q.size(), 0);
    if (q.empty())
      q.assign(p.size(), 0);
    input = bnsym::Polynomial(bnsym::Monomial(p, q));
  }
  bnsym::check_enumeration_guard(input.rank());
  const auto out = bnsym::rho(input);
  if (cfg.json_output())
    std::cout << bnsym::io::to_json(out).dump() << '\n';
  else
    std::cout << out.to_string() << '\n';
  return 0;
}

int cmd_straighten(const Config& cfg, bool verify) {
  const auto f = bnsym::io::polynomial_from_json(read_stdin_json());
  const auto expansion = bnsym::straighten(f, {}, cfg.max_rank_guard);
  if (verify && !(bnsym::evaluate(expansion) == f)) {
    std::cerr << "error: re-evaluated expansion differs from the input\n";
    return 1;
  }
  if (cfg.json_output()) {
    std::cout << bnsym::io::to_json(expansion).dump() << '\n';
    return 0;
  }
  if (expansion.empty())
    std::cout << "0\n";
  for (const auto& [s, coeff] : expansion.entries())
    std::cout << s.to_string() << ": " << coeff.to_string() << '\n';
  return 0;
}

int cmd_verify(const Config& cfg, std::size_t n) {
  bnsym::check_enumeration_guard(n, cfg.max_rank_guard);
  std::vector<bnsym::RankReport> reports;
  for (int total = 0; total <= cfg.truncation_degree; ++total)
    for (int a = 0; a <= total; ++a)
      reports.push_back(bnsym::verify_basis_rank(n, a, total - a, cfg.max_rank_guard));
  std::sort(reports.begin(), reports.end(),
            [](const auto& l, const auto& r) { return std::pair{l.a, l.b} < std::pair{r.a, r.b}; });
  bool all = true;
  json cells = json::array();
  for (const auto& r : reports) {
    all = all && r.pass();
    cells.push_back(bnsym::io::to_json(r));
  }
  if (cfg.json_output()) {
    std::cout << json{{"n", n}, {"max_degree", cfg.truncation_degree}, {"cells", cells}, {"pass", all}}.dump()
              << '\n';
  } else {
    std::cout << "   a    b  rank   dim series  gens  ok\n";
    for (const auto& r : reports)
      std::cout << std::setw(4) << r.a << ' ' << std::setw(4) << r.b << ' ' << std::setw(5) << r.rank << ' '
                << std::setw(5) << r.dim << ' ' << std::setw(6) << r.series << ' ' << std::setw(5)
                << r.generators << "  " << (r.pass() ? "yes" : "NO") << '\n';
    std::cout << (all ? "all cells pass" : "FAILED") << " (n=" << n << ", max degree " << cfg.truncation_degree
              << ")\n";
  }
  return all ? 0 : 1;
}

int cmd_hilbert(const Config& cfg, std::size_t n) {
  const auto numerator = bnsym::fmaj_numerator(n);
  const auto series = bnsym::hilbert_series(n, cfg.truncation_degree);
  if (cfg.json_output()) {
    std::cout << json{{"n", n},
                      {"numerator", bnsym::io::to_json(numerator)},
                      {"series", bnsym::io::to_json(series)}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << "numerator sum_sigma s^fmaj(sigma^-1) t^fmaj(sigma), n=" << n << '\n';
  for (const auto& [k, v] : numerator.terms())
    std::cout << "  s^" << k.first << " t^" << k.second << "  " << v << '\n';
  std::cout << "series coefficients up to total degree " << cfg.truncation_degree << '\n';
  for (const auto& [k, v] : series.terms())
    std::cout << "  s^" << k.first << " t^" << k.second << "  " << v << '\n';
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagonal invariants of the hyperoctahedral group B_n"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.output_format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--rank-guard", cfg.max_rank_guard, "Largest rank accepted by straighten and verify")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-degree", cfg.truncation_degree, "Total-degree bound for verify and hilbert")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::string window;
  std::string kind;
  std::string xs;
  std::string ys;
  bool verify_flag = false;
  std::size_t rank = 1;

  auto* stats = app.add_subcommand("stats", "Descent statistics of a signed permutation");
  stats->add_option("window", window, "Window, e.g. [2,-1,-4,3]")->required();

  auto* monomial = app.add_subcommand("monomial", "Descent monomial a, b, e or c of a window");
  monomial->add_option("kind", kind, "a | b | e | c")->required()->check(CLI::IsMember({"a", "b", "e", "c"}));
  monomial->add_option("window", window, "Window")->required();

  auto* rho = app.add_subcommand("rho", "Average a monomial (or a polynomial JSON on stdin) over B_n");
  rho->add_option("--x", xs, "x-exponents, comma separated");
  rho->add_option("--y", ys, "y-exponents, comma separated");

  auto* straighten = app.add_subcommand("straighten", "Expand an invariant (polynomial JSON on stdin)");
  straighten->add_flag("--verify", verify_flag, "Re-evaluate the expansion and check equality");

  auto* verify = app.add_subcommand("verify", "Degreewise rank check against the Hilbert series");
  verify->add_option("n", rank, "Rank")->required();

  auto* hilbert = app.add_subcommand("hilbert", "fmaj numerator and Hilbert series coefficients");
  hilbert->add_option("n", rank, "Rank")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stats)
      return cmd_stats(cfg, window);
    if (*monomial)
      return cmd_monomial(cfg, kind, window);
    if (*rho)
      return cmd_rho(cfg, xs, ys);
    if (*straighten)
      return cmd_straighten(cfg, verify_flag);
    if (*verify)
      return cmd_verify(cfg, rank);
    if (*hilbert)
      return cmd_hilbert(cfg, rank);
  } catch (const bnsym::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const bnsym::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
