#include <algorithm>

#include "qcc/errors.hpp"
#include "qcc/render.hpp"
#include "qcc/verify.hpp"

namespace qcc {

namespace {

Golden parse_golden() {
  const Json j = Json::parse(golden_json_text());
  Golden g;
  for (const auto& q : j.at("rank2")) {
    GoldenRank2 r;
    r.quiver = q.at("quiver").get<std::string>();
    for (const auto& v : q.at("variables"))
      r.variables.push_back({v.at("name").get<std::string>(), v.at("seq").get<std::vector<int>>(),
                             v.at("expansion").get<std::string>()});
    for (const auto& v : q.at("reps")) {
      GoldenRep rep{v.at("rep").get<std::string>(), v.at("variable").get<std::string>(), {}};
      for (const auto& c : v.at("counts"))
        rep.counts.emplace_back(c.at(0).get<ExponentVec>(), c.at(1).get<std::string>());
      r.reps.push_back(std::move(rep));
    }
    g.rank2.push_back(std::move(r));
  }
  for (const auto& v : j.at("rank4")) {
    GoldenRank4 r{v.at("name").get<std::string>(), v.at("seq").get<std::vector<int>>(),
                  v.at("expansion").get<std::string>(), {}};
    for (const auto& row : v.at("rows"))
      r.rows.push_back({row.at("e").get<ExponentVec>(), row.at("d").get<long long>(), row.at("gr").get<std::string>(),
                        row.at("exp").get<ExponentVec>()});
    g.rank4.push_back(std::move(r));
  }
  return g;
}

}  // namespace

const GoldenVariable& GoldenRank2::variable(const std::string& name) const {
  for (const auto& v : variables)
    if (v.name == name) return v;
  throw ValidationError("no golden variable " + name + " for " + quiver);
}

const GoldenRank2& Golden::quiver(const std::string& name) const {
  for (const auto& q : rank2)
    if (q.quiver == name) return q;
  throw ValidationError("no golden table for " + name);
}

const Golden& golden() {
  static const Golden g = parse_golden();
  return g;
}

std::vector<int> zero_based(const std::vector<int>& seq) {
  std::vector<int> r(seq);
  for (int& k : r) --k;
  return r;
}

TorusElement golden_element(const FormPtr& form, const std::string& text) { return parse_element(form, text); }

CountTable golden_counts(const ValuedQuiver& q, const GoldenRep& r) {
  CountTable t;
  t.mode = CountMode::Polynomial;
  t.dims.assign(q.n, 0);
  for (const auto& [e, s] : r.counts)
    for (int i = 0; i < q.n; ++i) t.dims[i] = std::max(t.dims[i], e[i]);
  for (const auto& [e, s] : r.counts) t.set(e, parse_qscalar(s));
  return t;
}

}  // namespace qcc
