#include "qcc/json_io.hpp"

#include <fstream>
#include <numeric>
#include <set>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

void allow_keys(const Json& j, const std::set<std::string>& keys, const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + " must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw ValidationError("unknown field '" + k + "' in " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& what) {
  if (!j.contains(key)) throw ValidationError(what + " is missing field '" + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("field " + what + " has the wrong type");
  }
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) throw ValidationError("coefficient must be an integer or a decimal string");
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
    throw ValidationError("bad integer '" + s + "'");
  return BigInt(s);
}

long long element_scale(const TorusElement& x) {
  long long d = 1;
  for (const auto& [a, c] : x.terms()) d = lcm_ll(d, c.denom_scale());
  return d;
}

Json terms_at(const QScalar& s, long long d) {
  Json arr = Json::array();
  for (const auto& [k, c] : s.terms_at_scale(d)) arr.push_back({{"hp", k}, {"c", c.str()}});
  return arr;
}

QScalar terms_from(const Json& arr, long long d) {
  if (!arr.is_array()) throw ValidationError("coefficient terms must be an array");
  std::vector<QScalar::Term> terms;
  for (const auto& t : arr) {
    allow_keys(t, {"hp", "c"}, "coefficient term");
    terms.emplace_back(get_as<long long>(need(t, "hp", "coefficient term"), "hp"), big_from_json(need(t, "c", "term")));
  }
  return QScalar::from_terms(d, std::move(terms));
}

IntMatrix matrix_from_json(const Json& j, int n, const std::string& what) {
  auto rows = get_as<std::vector<std::vector<long long>>>(j, what);
  if (static_cast<int>(rows.size()) != n) throw ValidationError(what + " must have " + std::to_string(n) + " rows");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw ValidationError(what + " must be square");
  return IntMatrix::from_rows(rows);
}

}  // namespace

Json qscalar_to_json(const QScalar& s) { return {{"d", s.denom_scale()}, {"terms", terms_at(s, s.denom_scale())}}; }

QScalar qscalar_from_json(const Json& j) {
  allow_keys(j, {"d", "terms"}, "scalar");
  long long d = get_as<long long>(need(j, "d", "scalar"), "d");
  if (d <= 0) throw ValidationError("scalar scale d must be positive");
  return terms_from(need(j, "terms", "scalar"), d);
}

Json torus_to_json(const TorusElement& x) {
  const long long d = element_scale(x);
  Json terms = Json::array();
  for (const auto& [a, c] : x.terms()) terms.push_back({{"exp", a}, {"coeff", terms_at(c, d)}});
  return {{"d", d}, {"terms", terms}};
}

TorusElement torus_from_json(const FormPtr& form, const Json& j) {
  allow_keys(j, {"d", "terms"}, "torus element");
  long long d = get_as<long long>(need(j, "d", "torus element"), "d");
  if (d <= 0) throw ValidationError("element scale d must be positive");
  TorusElement x(form);
  for (const auto& t : need(j, "terms", "torus element")) {
    allow_keys(t, {"exp", "coeff"}, "torus term");
    auto a = get_as<ExponentVec>(need(t, "exp", "torus term"), "exp");
    if (static_cast<int>(a.size()) != form->n()) throw ValidationError("exponent length does not match the form");
    x.add_term(a, terms_from(need(t, "coeff", "torus term"), d));
  }
  return x;
}

Json form_to_json(const SkewForm& f) {
  Json rows = Json::array();
  for (int i = 0; i < f.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < f.n(); ++j) {
      BigRational r = f.lambda(i, j);
      row.push_back({static_cast<long long>(numerator(r)), static_cast<long long>(denominator(r))});
    }
    rows.push_back(row);
  }
  return rows;
}

Json seed_to_json(const ValuedQuiver& q) { return {{"n", q.n}, {"B", q.B.to_rows()}, {"D", q.D}}; }

SeedSpec seed_from_json(const Json& j) {
  if (j.is_string()) {
    ValuedQuiver q = named_quiver(j.get<std::string>());
    return {q, compatible_pair(q)};
  }
  allow_keys(j, {"n", "B", "D", "lambda", "coeffs"}, "seed");
  int n = get_as<int>(need(j, "n", "seed"), "n");
  if (n <= 0) throw ValidationError("seed rank must be positive");
  IntMatrix B = matrix_from_json(need(j, "B", "seed"), n, "B");
  auto D = get_as<std::vector<long long>>(need(j, "D", "seed"), "D");
  if (static_cast<int>(D.size()) != n) throw ValidationError("D must have n entries");
  ValuedQuiver q(B, D);
  std::string coeffs = j.contains("coeffs") ? get_as<std::string>(j.at("coeffs"), "coeffs") : "none";
  if (coeffs != "none" && coeffs != "principal") throw ValidationError("coeffs must be \"none\" or \"principal\"");
  if (j.contains("lambda")) {
    if (coeffs == "principal") throw ValidationError("lambda cannot be combined with principal coefficients");
    auto rows = get_as<std::vector<std::vector<std::vector<long long>>>>(j.at("lambda"), "lambda");
    if (static_cast<int>(rows.size()) != n) throw ValidationError("lambda must be n x n");
    RationalMatrix m(n, std::vector<BigRational>(n));
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(rows[a].size()) != n) throw ValidationError("lambda must be n x n");
      for (int b = 0; b < n; ++b) {
        if (rows[a][b].size() != 2 || rows[a][b][1] == 0) throw ValidationError("lambda entries are [num, den]");
        m[a][b] = BigRational(rows[a][b][0], rows[a][b][1]);
      }
    }
    CompatiblePair p{B, D, make_form(SkewForm::from_rational(m)), n};
    if (!is_compatible(p)) throw ValidationError("lambda is not compatible with B and D");
    return {q, p};
  }
  return {q, coeffs == "principal" ? principal_completion(q) : compatible_pair(q)};
}

namespace {

std::string quiver_name(const ValuedQuiver& q) {
  for (const char* name : {"A2", "C2", "G2", "Kronecker", "rank4"})
    if (named_quiver(name) == q) return name;
  return "";
}

}  // namespace

Json rep_to_json(const ValuedRep& v) {
  Json j;
  std::string name = quiver_name(v.quiver);
  j["quiver"] = name.empty() ? Json{{"B", v.quiver.B.to_rows()}, {"D", v.quiver.D}} : Json(name);
  j["field"] = {{"p", v.p}, {"m", v.m}};
  j["dims"] = v.dims;
  Json arrows = Json::array();
  for (const auto& a : v.arrows) {
    long long g = std::gcd(v.quiver.D[a.from], v.quiver.D[a.to]);
    FiniteField K(v.p, static_cast<int>(v.m * g));
    Json mats = Json::array();
    for (const auto& mat : a.matrices) {
      Json rows = Json::array();
      for (const auto& row : mat) {
        Json r = Json::array();
        for (auto x : row) r.push_back(K.coeffs(x));
        rows.push_back(r);
      }
      mats.push_back(rows);
    }
    arrows.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"copies", a.matrices.size()}, {"matrices", mats}});
  }
  j["arrows"] = arrows;
  return j;
}

ValuedRep rep_from_json(const Json& j) {
  allow_keys(j, {"quiver", "field", "dims", "arrows"}, "representation");
  ValuedRep v;
  const Json& q = need(j, "quiver", "representation");
  if (q.is_string()) {
    v.quiver = named_quiver(q.get<std::string>());
  } else {
    allow_keys(q, {"B", "D"}, "quiver");
    auto D = get_as<std::vector<long long>>(need(q, "D", "quiver"), "D");
    v.quiver = ValuedQuiver(matrix_from_json(need(q, "B", "quiver"), static_cast<int>(D.size()), "B"), D);
  }
  const Json& f = need(j, "field", "representation");
  allow_keys(f, {"p", "m"}, "field");
  v.p = get_as<int>(need(f, "p", "field"), "p");
  v.m = f.contains("m") ? get_as<int>(f.at("m"), "m") : 1;
  v.dims = get_as<std::vector<int>>(need(j, "dims", "representation"), "dims");
  if (static_cast<int>(v.dims.size()) != v.quiver.n) throw ValidationError("dims length does not match the quiver");
  if (j.contains("arrows")) {
    for (const auto& a : j.at("arrows")) {
      allow_keys(a, {"from", "to", "copies", "matrices"}, "arrow");
      RepArrow r;
      r.from = get_as<int>(need(a, "from", "arrow"), "from") - 1;
      r.to = get_as<int>(need(a, "to", "arrow"), "to") - 1;
      if (r.from < 0 || r.to < 0 || r.from >= v.quiver.n || r.to >= v.quiver.n)
        throw ValidationError("arrow endpoint out of range");
      long long g = std::gcd(v.quiver.D[r.from], v.quiver.D[r.to]);
      FiniteField K(v.p, static_cast<int>(v.m * g));
      for (const auto& mat : need(a, "matrices", "arrow")) {
        FieldMatrix m;
        for (const auto& row : mat) {
          FieldVec out;
          for (const auto& x : row) {
            if (x.is_number_integer()) {
              long long c = x.get<long long>();
              if (c < 0 || c >= static_cast<long long>(K.size())) throw ValidationError("matrix entry out of range");
              out.push_back(static_cast<FiniteField::Elem>(c));
            } else {
              auto c = get_as<std::vector<int>>(x, "matrix entry");
              for (int t : c)
                if (t < 0 || t >= v.p) throw ValidationError("field coefficient out of range");
              out.push_back(K.from_coeffs(c));
            }
          }
          m.push_back(std::move(out));
        }
        r.matrices.push_back(std::move(m));
      }
      if (a.contains("copies") && get_as<size_t>(a.at("copies"), "copies") != r.matrices.size())
        throw ValidationError("copies does not match the number of matrices");
      v.arrows.push_back(std::move(r));
    }
  }
  validate_rep(v);
  return v;
}

Json table_to_json(const CountTable& t) {
  Json j;
  j["mode"] = mode_name(t.mode);
  if (t.mode == CountMode::IntegerAtQ0) j["q0"] = t.q0;
  j["dims"] = t.dims;
  Json entries = Json::array();
  for (const auto& e : box_vectors(t.dims)) {
    auto it = t.entries.find(e);
    if (it == t.entries.end()) continue;
    Json count = t.mode == CountMode::IntegerAtQ0 ? Json(specialize_integer(it->second, 1).str())
                                                  : qscalar_to_json(it->second);
    entries.push_back({{"e", e}, {"count", count}});
  }
  j["entries"] = entries;
  return j;
}

CountTable table_from_json(const Json& j) {
  allow_keys(j, {"mode", "q0", "dims", "entries"}, "count table");
  CountTable t;
  t.mode = parse_mode(get_as<std::string>(need(j, "mode", "count table"), "mode"));
  if (t.mode == CountMode::IntegerAtQ0) t.q0 = get_as<long long>(need(j, "q0", "count table"), "q0");
  t.dims = get_as<ExponentVec>(need(j, "dims", "count table"), "dims");
  for (const auto& e : need(j, "entries", "count table")) {
    allow_keys(e, {"e", "count"}, "count entry");
    auto v = get_as<ExponentVec>(need(e, "e", "count entry"), "e");
    if (v.size() != t.dims.size()) throw ValidationError("entry dimension vector has the wrong length");
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] < 0 || v[i] > t.dims[i]) throw ValidationError("entry outside the box 0 <= e <= dims");
    const Json& c = need(e, "count", "count entry");
    t.set(v, t.mode == CountMode::IntegerAtQ0 ? QScalar(big_from_json(c)) : qscalar_from_json(c));
  }
  return t;
}

Json triangulation_to_json(const Triangulation& t) {
  Json d = Json::array();
  for (auto [a, b] : t.diagonals()) d.push_back({a, b});
  return {{"n", t.n()}, {"diagonals", d}};
}

Triangulation triangulation_from_json(const Json& j) {
  allow_keys(j, {"n", "diagonals"}, "triangulation");
  int n = get_as<int>(need(j, "n", "triangulation"), "n");
  auto d = get_as<std::vector<std::pair<int, int>>>(need(j, "diagonals", "triangulation"), "diagonals");
  return Triangulation(n, d);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace qcc
