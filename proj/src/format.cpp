#include "modfrac/format.hpp"

#include "modfrac/errors.hpp"

namespace modfrac {

using nlohmann::json;

namespace {

constexpr std::string_view kUnicodeMinus = "−";

json pair_json(const FractionPair& p) {
  return {{"neg", to_json(p.neg)}, {"pos", to_json(p.pos)}};
}

}  // namespace

std::string render(const Fraction& f, Display display) {
  if (display == Display::BareInteger && f.d() == 1) return to_string(f.n());
  return to_string(f.n()) + "/" + to_string(f.d());
}

std::string render(const FractionPair& p) {
  return "(" + render(p.neg) + ", " + render(p.pos) + ")";
}

Fraction parse_fraction(std::string_view text) {
  std::string normalized;
  if (text.starts_with(kUnicodeMinus)) {
    normalized = "-";
    text.remove_prefix(kUnicodeMinus.size());
  }
  normalized += text;
  const auto slash = normalized.find('/');
  if (slash == std::string::npos) return Fraction(parse_integer(normalized), 1);
  const std::string_view whole(normalized);
  const std::string_view den = whole.substr(slash + 1);
  if (den.empty() || den.front() == '-' || den.front() == '+') {
    throw ParseError("bad denominator in '" + normalized + "'");
  }
  return Fraction(parse_integer(whole.substr(0, slash)), parse_integer(den));
}

json to_json(const Fraction& f) {
  return {{"n", to_string(f.n())}, {"d", to_string(f.d())}};
}

Fraction fraction_from_json(const json& j) {
  return Fraction(parse_integer(j.at("n").get<std::string>()),
                  parse_integer(j.at("d").get<std::string>()));
}

json to_json(const DescentTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    json s = pair_json(step.pair);
    s["det"] = to_string(determinant(step.pair));
    s["replaced"] = step.replaced ? json(std::string(to_string(*step.replaced)))
                                  : json(nullptr);
    steps.push_back(std::move(s));
  }
  return steps;
}

json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& r : report.checks) {
    json examples = json::array();
    for (const auto& c : r.counterexamples) {
      json trace = json::array();
      for (const auto& p : c.trace) trace.push_back(pair_json(p));
      examples.push_back({{"modulus", to_string(c.m)},
                          {"x", to_string(c.x)},
                          {"step", c.step},
                          {"detail", c.detail},
                          {"trace", std::move(trace)}});
    }
    checks.push_back({{"check", std::string(to_string(r.check))},
                      {"pass", r.pass},
                      {"fail", r.fail},
                      {"counterexamples", std::move(examples)}});
  }
  json anomalies = json::array();
  for (const auto& a : report.anomalies) {
    anomalies.push_back({{"modulus", to_string(a.m)},
                         {"x", to_string(a.x)},
                         {"steps", a.steps},
                         {"cap", a.cap}});
  }
  return {{"report", std::move(checks)}, {"anomalies", std::move(anomalies)}};
}

}  // namespace modfrac
