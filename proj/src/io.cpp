#include "ratsub/io.hpp"

#include "ratsub/parse.hpp"

namespace ratsub {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string need_string(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) throw InvalidArgument(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an integer list");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidArgument("expected an integer list");
    out.push_back(v.get<int>());
  }
  return out;
}

template <class F>
Json poly_list(const std::vector<Poly<F>>& v, const std::string& var) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(to_string(p, var));
  return a;
}

template <class F>
std::vector<Poly<F>> poly_list_from(const Json& j, const FieldSpec& field, const std::string& var) {
  if (!j.is_array()) throw InvalidArgument("expected a list of polynomials");
  std::vector<Poly<F>> out;
  for (const auto& s : j) out.push_back(parse_poly<F>(s.get<std::string>(), field, var));
  return out;
}

const char* drop_name(DegreeDrop d) {
  switch (d) {
    case DegreeDrop::NgtDGradeSlack:
      return "grade_slack";
    case DegreeDrop::FactorAtXhat:
      return "factor_at_xhat";
    case DegreeDrop::Exact:
      break;
  }
  return "exact";
}

}  // namespace

ProblemFile read_problem(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("problem file must be a JSON object");
  ProblemFile f;
  f.field = FieldSpec::parse(need_string(j, "field"));
  if (j.contains("variable")) f.var = need_string(j, "variable");
  if (j.contains("map_variable")) f.map_var = need_string(j, "map_variable");
  if (f.var.empty() || f.map_var.empty()) throw InvalidArgument("variable names must be nonempty");
  if (j.contains("grade") && !j.at("grade").is_null()) {
    if (!j.at("grade").is_number_integer()) throw InvalidArgument("'grade' must be an integer");
    f.grade = j.at("grade").get<int>();
    if (*f.grade < 0) throw InvalidArgument("'grade' must be nonnegative");
  }
  const Json& m = need(j, "matrix");
  if (!m.is_array() || m.empty()) throw InvalidArgument("'matrix' must be a nonempty list of rows");
  for (const auto& row : m) {
    if (!row.is_array() || row.empty()) throw InvalidArgument("matrix rows must be nonempty lists");
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (e.is_string())
        r.push_back(e.get<std::string>());
      else if (e.is_number_integer())
        r.push_back(std::to_string(e.get<long long>()));
      else
        throw InvalidArgument("matrix entries must be strings or integers");
    }
    if (!f.matrix.empty() && r.size() != f.matrix.front().size()) throw InvalidArgument("ragged matrix");
    f.matrix.push_back(std::move(r));
  }
  if (j.contains("map") && !j.at("map").is_null()) {
    f.map_n = need_string(j.at("map"), "n");
    f.map_d = need_string(j.at("map"), "d");
  }
  return f;
}

Json write_problem(const ProblemFile& f) {
  Json j;
  j["field"] = f.field.to_string();
  j["variable"] = f.var;
  j["map_variable"] = f.map_var;
  if (f.grade) j["grade"] = *f.grade;
  j["matrix"] = f.matrix;
  if (f.map_n) j["map"] = Json{{"n", *f.map_n}, {"d", *f.map_d}};
  return j;
}

template <class F>
Problem<F> build_problem(const ProblemFile& f) {
  const Index m = static_cast<Index>(f.matrix.size());
  const Index p = static_cast<Index>(f.matrix.front().size());
  Mat<Poly<F>> e(m, p);
  int deg = 0;
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < p; ++j) {
      e(i, j) = parse_poly<F>(f.matrix[i][j], f.field, f.var);
      deg = std::max(deg, e(i, j).degree());
    }
  }
  if (f.grade && *f.grade < deg) {
    throw InvalidArgument("grade " + std::to_string(*f.grade) + " below matrix degree " + std::to_string(deg));
  }
  Problem<F> out{PolyMatrix<F>(f.field, std::move(e), f.grade.value_or(deg)), std::nullopt};
  if (f.map_n) {
    out.map.emplace(parse_poly<F>(*f.map_n, f.field, f.map_var), parse_poly<F>(*f.map_d, f.field, f.map_var));
  }
  return out;
}

template <class F>
ProblemFile make_problem(const PolyMatrix<F>& p, const RationalMap<F>* map, const std::string& var,
                         const std::string& map_var) {
  ProblemFile f;
  f.field = p.field();
  f.var = var;
  f.map_var = map_var;
  f.grade = p.grade();
  for (Index i = 0; i < p.rows(); ++i) {
    std::vector<std::string> row;
    for (Index j = 0; j < p.cols(); ++j) row.push_back(to_string(p(i, j), var));
    f.matrix.push_back(std::move(row));
  }
  if (map != nullptr) {
    f.map_n = to_string(map->n(), map_var);
    f.map_d = to_string(map->d(), map_var);
  }
  return f;
}

template <class F>
Json to_json(const CharPoint<F>& c, const std::string& var) {
  return to_string(c, var);
}

template <class F>
CharPoint<F> charpoint_from_json(const Json& j, const FieldSpec& field, const std::string& var) {
  const std::string s = j.get<std::string>();
  if (s == "inf") return CharPoint<F>::infinity();
  return CharPoint<F>(parse_poly<F>(s, field, var));
}

template <class F>
Json to_json(const PolyMatrix<F>& p, const std::string& var) {
  Json rows = Json::array();
  for (Index i = 0; i < p.rows(); ++i) {
    Json r = Json::array();
    for (Index j = 0; j < p.cols(); ++j) r.push_back(to_string(p(i, j), var));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <class F>
PolyMatrix<F> polymatrix_from_json(const Json& j, const FieldSpec& field, const std::string& var, int grade) {
  const Index m = static_cast<Index>(j.size());
  const Index p = m == 0 ? 0 : static_cast<Index>(j.at(0).size());
  Mat<Poly<F>> e(m, p);
  for (Index i = 0; i < m; ++i) {
    for (Index k = 0; k < p; ++k) e(i, k) = parse_poly<F>(j.at(i).at(k).template get<std::string>(), field, var);
  }
  return PolyMatrix<F>(field, std::move(e), grade);
}

template <class F>
Json to_json(const CompleteEigenstructure<F>& e, const std::string& var) {
  Json j;
  j["grade"] = e.grade;
  j["rank"] = e.rank;
  Json fin = Json::array();
  for (const auto& g : e.finite) fin.push_back(Json{{"base", to_json(g.base, var)}, {"exponents", g.exponents}});
  j["finite"] = std::move(fin);
  j["infinite"] = e.infinite;
  j["right_indices"] = e.right_indices;
  j["left_indices"] = e.left_indices;
  return j;
}

template <class F>
CompleteEigenstructure<F> eigenstructure_from_json(const Json& j, const FieldSpec& field, const std::string& var) {
  CompleteEigenstructure<F> e;
  e.grade = need(j, "grade").get<int>();
  e.rank = need(j, "rank").get<Index>();
  for (const auto& g : need(j, "finite")) {
    e.finite.push_back({charpoint_from_json<F>(need(g, "base"), field, var), int_list(need(g, "exponents"))});
  }
  e.infinite = int_list(need(j, "infinite"));
  e.right_indices = int_list(need(j, "right_indices"));
  e.left_indices = int_list(need(j, "left_indices"));
  return e;
}

template <class F>
Json to_json(const TheoremReport<F>& r, const std::string& var, const std::string& map_var) {
  Json j;
  j["verdict"] = r.verdict;
  j["G"] = r.G;
  j["grade_p"] = r.grade_p;
  j["grade_q"] = r.grade_q;
  j["rank_p"] = r.rank_p;
  j["rank_q"] = r.rank_q;
  j["invariants_p"] = poly_list(r.invariants_p, var);
  j["invariants_q"] = poly_list(r.invariants_q, map_var);
  j["infinite_p"] = r.infinite_p;
  j["infinite_q"] = r.infinite_q;
  j["internal_exponents"] = r.internal_exponents;
  Json recs = Json::array();
  for (const auto& m : r.records) {
    Json x;
    x["x_base"] = to_json(m.x_base, var);
    x["x_grouped"] = m.x_grouped;
    x["x_exponents"] = m.x_exponents;
    x["y_base"] = to_json(m.y_base, map_var);
    x["y_grouped"] = m.y_grouped;
    x["multiplicity"] = m.multiplicity;
    x["predicted"] = m.predicted;
    x["observed"] = m.observed;
    x["converse"] = m.converse;
    x["ok"] = m.ok;
    recs.push_back(std::move(x));
  }
  j["records"] = std::move(recs);
  auto idx = [](const IndexRecord& i) {
    return Json{{"x_indices", i.x_indices}, {"y_indices", i.y_indices}, {"ok", i.ok}};
  };
  j["right"] = idx(r.right);
  j["left"] = idx(r.left);
  j["identity"] = r.identity;
  j["exhaustive"] = r.exhaustive;
  j["converse"] = r.converse;
  j["notes"] = r.notes;
  return j;
}

template <class F>
TheoremReport<F> theorem_report_from_json(const Json& j, const FieldSpec& field, const std::string& var,
                                          const std::string& map_var) {
  TheoremReport<F> r;
  r.verdict = need(j, "verdict").get<bool>();
  r.G = need(j, "G").get<int>();
  r.grade_p = need(j, "grade_p").get<int>();
  r.grade_q = need(j, "grade_q").get<int>();
  r.rank_p = need(j, "rank_p").get<Index>();
  r.rank_q = need(j, "rank_q").get<Index>();
  r.invariants_p = poly_list_from<F>(need(j, "invariants_p"), field, var);
  r.invariants_q = poly_list_from<F>(need(j, "invariants_q"), field, map_var);
  r.infinite_p = int_list(need(j, "infinite_p"));
  r.infinite_q = int_list(need(j, "infinite_q"));
  r.internal_exponents = int_list(need(j, "internal_exponents"));
  for (const auto& x : need(j, "records")) {
    MappingRecord<F> m;
    m.x_base = charpoint_from_json<F>(need(x, "x_base"), field, var);
    m.x_grouped = need(x, "x_grouped").get<bool>();
    m.x_exponents = int_list(need(x, "x_exponents"));
    m.y_base = charpoint_from_json<F>(need(x, "y_base"), field, map_var);
    m.y_grouped = need(x, "y_grouped").get<bool>();
    m.multiplicity = need(x, "multiplicity").get<int>();
    m.predicted = int_list(need(x, "predicted"));
    m.observed = int_list(need(x, "observed"));
    m.converse = need(x, "converse").get<bool>();
    m.ok = need(x, "ok").get<bool>();
    r.records.push_back(std::move(m));
  }
  auto idx = [](const Json& i) {
    return IndexRecord{int_list(need(i, "x_indices")), int_list(need(i, "y_indices")), need(i, "ok").get<bool>()};
  };
  r.right = idx(need(j, "right"));
  r.left = idx(need(j, "left"));
  r.identity = need(j, "identity").get<bool>();
  r.exhaustive = need(j, "exhaustive").get<bool>();
  r.converse = need(j, "converse").get<bool>();
  r.notes = need(j, "notes").get<std::vector<std::string>>();
  return r;
}

template <class F>
Json to_json(const SmithDecomposition<F>& s, const std::string& var) {
  Json j;
  j["invariants"] = poly_list(s.invariants, var);
  j["A"] = to_json(s.A, var);
  j["S"] = to_json(s.S, var);
  j["B"] = to_json(s.B, var);
  return j;
}

template <class F>
Json to_json(const PreimageSet<F>& s, const std::string& var, const std::string& map_var) {
  Json j;
  j["target"] = to_json(s.target, var);
  Json e = Json::array();
  for (const auto& p : s.entries) {
    Json x{{"point", to_json(p.point, map_var)}};
    if (!p.point.is_infinity() && p.point.is_linear()) x["value"] = to_string(p.point.root());
    x["multiplicity"] = p.multiplicity;
    e.push_back(std::move(x));
  }
  j["entries"] = std::move(e);
  j["S"] = s.S;
  j["includes_infinity"] = s.includes_infinity;
  return j;
}

template <class F>
Json to_json(const MinimalBasis<F>& b, const std::string& var) {
  Json cols = Json::array();
  for (Index c = 0; c < b.size(); ++c) {
    Json v = Json::array();
    for (Index r = 0; r < b.vectors.rows(); ++r) v.push_back(to_string(b.vectors(r, c), var));
    cols.push_back(std::move(v));
  }
  return Json{{"indices", b.indices}, {"order", b.order()}, {"vectors", std::move(cols)}};
}

template <class F>
Json to_json(const DegreeBoundReport<F>& d) {
  Json j{{"bound", d.q}, {"attained", d.attained}, {"reason", drop_name(d.reason)}};
  if (d.xhat) j["xhat"] = to_string(*d.xhat);
  return j;
}

#define RATSUB_INSTANTIATE(F)                                                                                 \
  template Problem<F> build_problem(const ProblemFile&);                                                      \
  template ProblemFile make_problem(const PolyMatrix<F>&, const RationalMap<F>*, const std::string&,          \
                                    const std::string&);                                                      \
  template Json to_json(const CharPoint<F>&, const std::string&);                                             \
  template CharPoint<F> charpoint_from_json(const Json&, const FieldSpec&, const std::string&);               \
  template Json to_json(const PolyMatrix<F>&, const std::string&);                                            \
  template PolyMatrix<F> polymatrix_from_json(const Json&, const FieldSpec&, const std::string&, int);        \
  template Json to_json(const CompleteEigenstructure<F>&, const std::string&);                                \
  template CompleteEigenstructure<F> eigenstructure_from_json(const Json&, const FieldSpec&,                  \
                                                              const std::string&);                            \
  template Json to_json(const TheoremReport<F>&, const std::string&, const std::string&);                     \
  template TheoremReport<F> theorem_report_from_json(const Json&, const FieldSpec&, const std::string&,       \
                                                     const std::string&);                                     \
  template Json to_json(const SmithDecomposition<F>&, const std::string&);                                    \
  template Json to_json(const PreimageSet<F>&, const std::string&, const std::string&);                       \
  template Json to_json(const MinimalBasis<F>&, const std::string&);                                          \
  template Json to_json(const DegreeBoundReport<F>&);

RATSUB_INSTANTIATE(Rational)
RATSUB_INSTANTIATE(ModP)

}  // namespace ratsub
