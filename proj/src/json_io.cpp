#include "ginv/json_io.hpp"

#include "ginv/dsl.hpp"

namespace ginv {

using nlohmann::json;

json to_json(const Rat& r) { return r.str(); }

json to_json(const GaussianRat& z) {
  return json{{"re", z.re().str()}, {"im", z.im().str()}};
}

json to_json(const PowerProduct& p) {
  json out = json::array();
  for (const auto& [base, exp] : p.factors()) {
    out.push_back({{"base", base.str()}, {"exp", exp.str()}});
  }
  return out;
}

json to_json(const PhaseTwist& t) {
  json out = json::array();
  for (const auto& [base, exp] : t.exponents()) {
    out.push_back({{"base", base.str()}, {"exp", exp.str()}});
  }
  return out;
}

json to_json(const UnitPhase& u) {
  return json{{"tag", u.tag()}, {"twist", to_json(u.twist())}};
}

json to_json(const Fingerprint& fp) {
  json h = json::array();
  for (const auto& v : fp.h) h.push_back(to_json(v));
  return json{{"degree", to_json(fp.degree)},
              {"conductor", to_json(fp.conductor)},
              {"root_number", to_json(fp.root_number)},
              {"h_star", std::move(h)}};
}

json to_json(const DecoratedGamma& g) {
  json factors = json::array();
  for (std::size_t j = 0; j < g.gamma.size(); ++j) {
    factors.push_back({{"lambda", to_json(g.gamma.lambdas[j])},
                       {"mu", to_json(g.gamma.mus[j])}});
  }
  json roots = json::array(), poles = json::array();
  for (const auto& a : g.rational.roots()) roots.push_back(to_json(a));
  for (const auto& b : g.rational.poles()) poles.push_back(to_json(b));
  return json{{"omega", to_json(g.gamma.omega)},
              {"Q", to_json(g.gamma.q)},
              {"factors", std::move(factors)},
              {"rational",
               {{"kappa_sign", g.rational.sign()},
                {"kappa", to_json(g.rational.kappa())},
                {"roots", std::move(roots)},
                {"poles", std::move(poles)}}},
              {"text", print_decorated(g)}};
}

json to_json(const MoveReport& report) {
  return json{{"c_re", report.c.real()},
              {"c_im", report.c.imag()},
              {"max_rel_dev", report.max_rel_dev},
              {"omega_consistent", report.omega_consistent},
              {"points_used", report.points_used}};
}

json to_json(const SuiteSummary& summary) {
  json failures = json::array();
  for (const auto& f : summary.failures) {
    failures.push_back({{"case", f.case_index},
                        {"kind", f.kind},
                        {"message", f.message},
                        {"data", print_decorated(f.data)},
                        {"trace", print_trace(f.trace)}});
  }
  return json{{"cases_run", summary.cases_run},
              {"moves",
               {{"expand", summary.moves.expands},
                {"contract", summary.moves.contracts},
                {"split", summary.moves.splits},
                {"merge", summary.moves.merges}}},
              {"exact_failures", summary.exact_failures},
              {"numeric_failures", summary.numeric_failures},
              {"failures", std::move(failures)}};
}

}  // namespace ginv
