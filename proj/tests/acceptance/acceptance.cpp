// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "supchar/verify.hpp"

using namespace supchar;

namespace {

struct Config {
  Family family;
  int n;
  unsigned p;
  unsigned e;
};

std::string label(const Config& c) {
  std::ostringstream os;
  os << family_letter(c.family) << c.n << "/q=" << c.p;
  if (c.e > 1) os << "^" << c.e;
  return os.str();
}

// Every configuration with |U| <= 1000.
const std::vector<Config>& desk_scale() {
  static const std::vector<Config> all{
      {Family::C, 1, 3, 1}, {Family::C, 1, 5, 1}, {Family::C, 1, 7, 1}, {Family::C, 1, 3, 2},
      {Family::B, 1, 3, 1}, {Family::B, 1, 5, 1}, {Family::B, 1, 7, 1}, {Family::B, 1, 3, 2},
      {Family::D, 1, 3, 1}, {Family::C, 2, 3, 1}, {Family::C, 2, 5, 1}, {Family::B, 2, 3, 1},
      {Family::B, 2, 5, 1}, {Family::D, 2, 3, 1}, {Family::D, 2, 5, 1}, {Family::D, 2, 7, 1},
      {Family::D, 2, 3, 2}, {Family::D, 3, 3, 1}};
  return all;
}

const Config kC2{Family::C, 2, 3, 1};
const Config kB2{Family::B, 2, 3, 1};
const Config kD2{Family::D, 2, 3, 1};
const Config kD3{Family::D, 3, 3, 1};

// Collects failures for one criterion.
struct Criterion {
  std::vector<std::string> problems;
  std::uint64_t checks = 0;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) problems.push_back(what);
  }
  void suite(const Config& c, Verifier& v, const std::string& name, bool allow_skip = false) {
    const CheckReport r = v.run(name);
    checks += r.instances;
    if (r.status == "fail") {
      problems.push_back(label(c) + " " + name + ": " + r.first_counterexample.value_or("failed"));
    } else if (r.status == "skipped" && !allow_skip) {
      problems.push_back(label(c) + " " + name + " skipped: " + r.note);
    } else if (r.status == "pass" && r.instances == 0 && !allow_skip) {
      problems.push_back(label(c) + " " + name + " ran no checks");
    }
  }
};

GroupModel make(const Config& c) { return GroupModel(c.family, c.n, FieldCtx(c.p, c.e)); }

std::vector<std::string> cli_args(const Config& c) {
  return {"--family", std::string(1, family_letter(c.family)), "--n", std::to_string(c.n), "--p", std::to_string(c.p),
          "--e", std::to_string(c.e)};
}

Criterion partition() {
  Criterion out;
  const std::vector<std::pair<Config, std::uint64_t>> cases{{kC2, 81}, {kB2, 81}, {kD2, 9}, {kD3, 729}};
  for (const auto& [c, order] : cases) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "partition");
    std::uint64_t total = 0;
    for (auto s : v.superclasses().sizes()) total += s;
    out.require(total == order, label(c) + " sizes sum to " + std::to_string(total));
  }
  return out;
}

Criterion counting() {
  Criterion out;
  for (const auto& [c, expected] : std::vector<std::pair<Config, std::size_t>>{{kC2, 17}, {kD2, 5}}) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "counting");
    const std::size_t pairs = enumerate_basic_pairs(g.roots(), g.field()).size();
    out.require(pairs == expected, label(c) + " has " + std::to_string(pairs) + " basic pairs");
    out.require(v.superclasses().pairs().size() == pairs, label(c) + " superclass count");
  }
  return out;
}

Criterion values() {
  Criterion out;
  for (const Config& c : desk_scale()) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "values", g.rank() == 0);
    out.suite(c, v, "degrees", g.rank() == 0);
  }
  return out;
}

Criterion kirillov() {
  Criterion out;
  for (const Config& c : {kC2, Config{Family::C, 2, 5, 1}}) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "kirillov");
  }
  return out;
}

Criterion orthogonality() {
  Criterion out;
  for (const Config& c : {kC2, kB2, kD2}) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "orthogonality");
    out.suite(c, v, "convolution");
  }
  return out;
}

Criterion regular() {
  Criterion out;
  for (const Config& c : {kC2, kB2, kD2}) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "regular");
    try {
      for (const auto& m : regular_decomposition(v.table())) out.require(m > 0, label(c) + " coefficient " + m.get_str());
    } catch (const std::logic_error& e) {
      out.require(false, label(c) + ": " + e.what());
    }
  }
  return out;
}

Criterion factorization() {
  Criterion out;
  for (const Config& c : {kC2, kD2}) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "factorization");
  }
  return out;
}

Criterion structural() {
  Criterion out;
  for (const Config& c : {kC2, kB2, kD2, kD3}) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "structural");
  }
  return out;
}

Criterion gauss() {
  Criterion out;
  for (const Config& c : {Config{Family::C, 1, 3, 1}, Config{Family::C, 1, 5, 1}, Config{Family::C, 1, 7, 1},
                          Config{Family::C, 1, 3, 2}}) {
    const GroupModel g = make(c);
    Verifier v(g);
    out.suite(c, v, "gauss");
  }
  return out;
}

Criterion determinism() {
  Criterion out;
  const auto start = std::chrono::steady_clock::now();
  for (const Config& c : desk_scale()) {
    std::vector<std::string> args{"verify", "--suite", "all"};
    for (auto& a : cli_args(c)) args.push_back(a);
    std::ostringstream sink, err;
    const int rc = run_cli(args, sink, err);
    out.require(rc == 0, label(c) + " verify exit " + std::to_string(rc));
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < 300.0, "verify over desk scale took " + std::to_string(seconds) + " s");
  for (const Config& c : {kC2, kB2, kD2, kD3}) {
    for (const char* format : {"json", "csv"}) {
      std::vector<std::string> args{"table", "--format", format};
      for (auto& a : cli_args(c)) args.push_back(a);
      std::ostringstream first, second, err;
      const int rc1 = run_cli(args, first, err);
      const int rc2 = run_cli(args, second, err);
      out.require(rc1 == 0 && rc2 == 0 && !first.str().empty() && first.str() == second.str(),
                  label(c) + " " + format + " table differs between runs");
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria{
      {"1 partition", partition},
      {"2 counting", counting},
      {"3 value formulas", values},
      {"4 coadjoint-orbit values", kirillov},
      {"5 orthogonality and convolution", orthogonality},
      {"6 regular character", regular},
      {"7 factorization", factorization},
      {"8 structural lemmas", structural},
      {"9 gauss sums", gauss},
      {"10 determinism and performance", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.problems.empty();
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  (" << c.checks << " checks, " << seconds << " s)";
    if (!ok) std::cout << "  " << c.problems.front();
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
