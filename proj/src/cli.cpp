#include "modfrac/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "modfrac/descent.hpp"
#include "modfrac/errors.hpp"
#include "modfrac/format.hpp"
#include "modfrac/harness.hpp"
#include "modfrac/minimality.hpp"
#include "modfrac/oracle.hpp"

namespace modfrac::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string modulus;
  std::string x;
  std::string cls = "both";
  std::string format = "text";
  std::string m_min;
  std::string m_max;
  std::string checks = "all";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = SweepConfig{}.seed;
  std::size_t random_pairs = SweepConfig{}.random_pairs;
  std::string ceiling;
  std::size_t max_steps = 100'000'000;
  bool cross_check = false;
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool json_mode;
};

oracle::Ceilings ceilings_for(const Options& o) {
  oracle::Ceilings c = oracle::Ceilings::from_environment();
  if (!o.ceiling.empty()) {
    const Integer value = parse_integer(o.ceiling);
    c.enumeration = value;
    c.pair_check = value;
  }
  return c;
}

Residue residue_for(const Options& o, Io& io) {
  const Modulus m(parse_integer(o.modulus));
  const Integer raw = parse_integer(o.x);
  Residue x = Residue::reduce(raw, m);
  if (x.value() != raw) {
    io.err << "note: x = " << raw << " reduced modulo " << m.value() << " to "
           << x.value() << '\n';
  }
  return x;
}

void emit(Io& io, const json& j) { io.out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s;
}

int cmd_repr(const Options& o, Io io) {
  const Residue x = residue_for(o, io);
  const Fraction minimum = minimum_fraction(x, o.max_steps);
  const Fraction witness = sqrt_bound_witness(x, o.max_steps);
  if (!represents(x, minimum) || !represents(x, witness) ||
      !within_sqrt_bound(witness, x.modulus())) {
    throw InvariantViolation("repr produced a fraction that fails its check");
  }
  if (io.json_mode) {
    emit(io, {{"modulus", to_string(x.m())},
              {"x", to_string(x.value())},
              {"minimum", to_json(minimum)},
              {"witness", to_json(witness)}});
  } else {
    io.out << render(minimum, Display::BareInteger) << '\n'
           << "sqrt-bound witness: " << render(witness, Display::BareInteger)
           << '\n';
  }
  return kOk;
}

int cmd_enumerate(const Options& o, Io io) {
  const Residue x = residue_for(o, io);
  const oracle::Ceilings ceilings = ceilings_for(o);
  std::vector<std::pair<ResidueClass, std::vector<Fraction>>> lists;
  if (o.cls != "positive") {
    lists.emplace_back(ResidueClass::Negative,
                       oracle::enumerate_class(x, ResidueClass::Negative, ceilings));
  }
  if (o.cls != "negative") {
    lists.emplace_back(ResidueClass::Positive,
                       oracle::enumerate_class(x, ResidueClass::Positive, ceilings));
  }
  if (io.json_mode) {
    json fractions = json::array();
    for (const auto& [c, list] : lists) {
      for (const auto& f : list) fractions.push_back(to_json(f));
    }
    emit(io, {{"modulus", to_string(x.m())},
              {"x", to_string(x.value())},
              {"class", o.cls},
              {"fractions", std::move(fractions)}});
    return kOk;
  }
  for (const auto& [c, list] : lists) {
    std::vector<std::string> parts;
    parts.reserve(list.size());
    for (const auto& f : list) parts.push_back(render(f));
    if (lists.size() > 1) io.out << to_string(c) << ": ";
    io.out << join(parts) << '\n';
  }
  return kOk;
}

int cmd_trace(const Options& o, Io io) {
  const Residue x = residue_for(o, io);
  const DescentTrace trace = run_descent(x, o.max_steps);
  if (io.json_mode) {
    emit(io, {{"modulus", to_string(x.m())},
              {"x", to_string(x.value())},
              {"trace", to_json(trace)}});
  } else {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const DescentStep& s = trace.steps[i];
      io.out << i << "  " << render(s.pair) << "  det " << determinant(s.pair);
      if (s.replaced) io.out << "  replaced " << to_string(*s.replaced);
      io.out << '\n';
    }
  }
  for (const auto& s : trace.steps) {
    if (determinant(s.pair) != x.m()) {
      throw InvariantViolation("determinant of " + render(s.pair) + " is " +
                               to_string(determinant(s.pair)) + ", not M");
    }
  }
  return kOk;
}

int cmd_table(const Options& o, Io io) {
  const Modulus m(parse_integer(o.modulus));
  const oracle::Ceilings ceilings = ceilings_for(o);
  if (o.cross_check && m.value() > ceilings.enumeration) {
    throw CeilingExceeded("cross-checked table refused: modulus exceeds " +
                          to_string(ceilings.enumeration));
  }
  json fractions = json::array();
  std::vector<std::string> parts;
  std::vector<std::string> mismatches;
  for (Integer v = 1; v < m.value(); ++v) {
    const Residue x(v, m);
    const Fraction f = minimum_fraction(x, o.max_steps);
    if (o.cross_check) {
      const Fraction brute = oracle::brute_minimum(x, ceilings);
      if (!represents(x, f) || f != brute) {
        mismatches.push_back("x = " + to_string(v) + ": " + render(f) +
                             " vs brute " + render(brute));
      }
    }
    if (io.json_mode) {
      json entry = to_json(f);
      entry["x"] = to_string(v);
      fractions.push_back(std::move(entry));
    } else {
      parts.push_back(render(f, Display::BareInteger));
    }
  }
  if (io.json_mode) {
    emit(io, {{"modulus", to_string(m.value())}, {"fractions", std::move(fractions)}});
  } else {
    io.out << join(parts) << '\n';
  }
  for (const auto& line : mismatches) io.err << "mismatch: " << line << '\n';
  return mismatches.empty() ? kOk : kCounterexample;
}

std::vector<Check> parse_checks(const std::string& list) {
  if (list == "all") return all_checks();
  std::vector<Check> out;
  std::stringstream ss(list);
  for (std::string name; std::getline(ss, name, ',');) {
    auto c = parse_check(name);
    if (!c) throw ParseError("unknown check '" + name + "'");
    out.push_back(*c);
  }
  if (out.empty()) throw ParseError("no checks selected");
  return out;
}

void print_report(const VerificationReport& report, std::ostream& os) {
  os << std::left << std::setw(14) << "check" << std::right << std::setw(12)
     << "pass" << std::setw(8) << "fail" << '\n';
  for (const auto& r : report.checks) {
    os << std::left << std::setw(14) << to_string(r.check) << std::right
       << std::setw(12) << r.pass << std::setw(8) << r.fail << '\n';
  }
  for (const auto& r : report.checks) {
    for (const auto& c : r.counterexamples) {
      os << "counterexample [" << to_string(c.check) << "] M = " << c.m
         << ", x = " << c.x << ", step " << c.step << ": " << c.detail
         << "\n  replay: modfrac trace -m " << c.m << " --x " << c.x << '\n';
    }
  }
  if (!report.anomalies.empty()) {
    os << "anomalies: " << report.anomalies.size()
       << " trace(s) longer than the step cap (reported, not failures)\n";
  }
  os << "duration: " << report.duration.count() << " ms\n";
}

int cmd_verify(const Options& o, Io io) {
  SweepConfig cfg;
  cfg.m_min = parse_integer(o.m_min);
  cfg.m_max = parse_integer(o.m_max);
  cfg.checks = parse_checks(o.checks);
  cfg.workers = o.workers;
  cfg.seed = o.seed;
  cfg.random_pairs = o.random_pairs;
  cfg.ceilings = ceilings_for(o);
  const VerificationReport report = run_sweep(cfg);
  if (io.json_mode) {
    json j = to_json(report);
    j["m_min"] = to_string(cfg.m_min);
    j["m_max"] = to_string(cfg.m_max);
    j["seed"] = cfg.seed;
    emit(io, j);
  } else {
    print_report(report, io.out);
  }
  return report.ok() ? kOk : kCounterexample;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimal fractional representations of integers mod M",
               "modfrac"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_residue = [&](CLI::App* sub) {
    sub->add_option("-m,--modulus", o.modulus, "Modulus M (decimal or 0x hex)")
        ->required();
    sub->add_option("--x", o.x, "Residue x; reduced mod M if outside [0, M)")
        ->required();
  };
  auto add_ceiling = [&](CLI::App* sub) {
    sub->add_option("--ceiling-override", o.ceiling,
                    "Largest modulus for brute-force work "
                    "(default from MODFRAC_CEILING or built in)");
  };
  auto add_max_steps = [&](CLI::App* sub) {
    sub->add_option("--max-steps", o.max_steps, "Descent step limit");
  };

  auto* repr = app.add_subcommand("repr", "Minimum fraction and a sqrt(M)-bounded witness");
  add_residue(repr);
  add_format(repr);
  add_max_steps(repr);

  auto* enumerate = app.add_subcommand("enumerate", "All representations by denominator");
  add_residue(enumerate);
  enumerate->add_option("--class", o.cls, "Residue class")
      ->check(CLI::IsMember({"positive", "negative", "both"}));
  add_format(enumerate);
  add_ceiling(enumerate);

  auto* trace = app.add_subcommand("trace", "Pairs visited by the mediant descent");
  add_residue(trace);
  add_format(trace);
  add_max_steps(trace);

  auto* table = app.add_subcommand("table", "Minimum fraction for every x in 1..M-1");
  table->add_option("-m,--modulus", o.modulus, "Modulus M")->required();
  table->add_flag("--cross-check", o.cross_check, "Compare against brute force");
  add_format(table);
  add_ceiling(table);
  add_max_steps(table);

  auto* verify = app.add_subcommand("verify", "Invariant sweeps over a range of moduli");
  verify->add_option("--m-min", o.m_min, "Smallest modulus")->required();
  verify->add_option("--m-max", o.m_max, "Largest modulus")->required();
  verify->add_option("--checks", o.checks,
                     "Comma-separated: determinant, sqrt-bound, minimality, "
                     "progress, oracle, random-pairs; or all");
  verify->add_option("--workers", o.workers, "Worker threads");
  verify->add_option("--seed", o.seed, "Seed for the random-pair check");
  verify->add_option("--random-pairs", o.random_pairs,
                     "Random pairs per modulus for the random-pair check");
  add_format(verify);
  add_ceiling(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Io io{out, err, o.format == "json"};
  try {
    if (*repr) return cmd_repr(o, io);
    if (*enumerate) return cmd_enumerate(o, io);
    if (*trace) return cmd_trace(o, io);
    if (*table) return cmd_table(o, io);
    return cmd_verify(o, io);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCeiling;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace modfrac::cli
