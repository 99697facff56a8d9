#include "wqg/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wqg/errors.hpp"

namespace wqg {

namespace {

using json = nlohmann::ordered_json;
using Index = std::vector<std::size_t>;
using Entries = std::vector<std::pair<Index, Scalar>>;

constexpr int kVersion = 1;

// ---- reading

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

std::size_t read_size(const json& obj, const std::string& key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_number_unsigned()) throw SchemaError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

std::string read_string(const json& obj, const std::string& key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) throw SchemaError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

Scalar read_scalar(FieldSpec f, const json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + ": scalars are written as strings");
  try {
    return Scalar::parse(f, v.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Entries read_entries(FieldSpec f, const json& obj, const std::string& key, const Index& bounds,
                     const std::string& where) {
  const json& list = member(obj, key, where);
  const std::string path = where + "." + key;
  if (!list.is_array()) throw SchemaError(path + ": expected a list of [indices, scalar] entries");
  Entries out;
  std::map<Index, std::size_t> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string at = path + "[" + std::to_string(e) + "]";
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array()) {
      throw SchemaError(at + ": expected [indices, scalar]");
    }
    if (entry[0].size() != bounds.size()) {
      throw SchemaError(at + ": expected " + std::to_string(bounds.size()) + " indices");
    }
    Index idx;
    for (std::size_t a = 0; a < bounds.size(); ++a) {
      const json& x = entry[0][a];
      if (!x.is_number_unsigned()) throw SchemaError(at + ": indices are non-negative integers");
      std::size_t v = x.get<std::size_t>();
      if (v >= bounds[a]) {
        throw SchemaError(at + ": index " + std::to_string(v) + " out of range " + std::to_string(bounds[a]));
      }
      idx.push_back(v);
    }
    if (!seen.emplace(idx, e).second) throw SchemaError(at + ": repeated index");
    out.emplace_back(std::move(idx), read_scalar(f, entry[1], at));
  }
  return out;
}

Tensor3 to_tensor(FieldSpec f, const Entries& es, std::size_t a, std::size_t b, std::size_t c) {
  Tensor3 t(f, a, b, c);
  for (const auto& [i, s] : es) t(i[0], i[1], i[2]) = s;
  return t;
}

Vector to_vector(FieldSpec f, const Entries& es, std::size_t n) {
  Vector v = zero_vector(f, n);
  for (const auto& [i, s] : es) v[i[0]] = s;
  return v;
}

Matrix to_matrix(FieldSpec f, const Entries& es, std::size_t r, std::size_t c) {
  Matrix m(f, r, c);
  for (const auto& [i, s] : es) m(i[0], i[1]) = s;
  return m;
}

std::vector<std::string> read_names(const json& obj, std::size_t dim, const std::string& where) {
  auto it = obj.find("basis");
  if (it == obj.end()) return {};
  if (!it->is_array() || it->size() != dim) throw SchemaError(where + ".basis: expected " + std::to_string(dim) + " names");
  std::vector<std::string> out;
  for (const auto& s : *it) {
    if (!s.is_string()) throw SchemaError(where + ".basis: names are strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

FinDimAlgebra read_algebra(FieldSpec f, const json& obj, std::size_t n, const std::string& where) {
  return FinDimAlgebra(f, n, to_tensor(f, read_entries(f, obj, "mul", {n, n, n}, where), n, n, n),
                       to_vector(f, read_entries(f, obj, "unit", {n}, where), n));
}

FinDimCoalgebra read_coalgebra(FieldSpec f, const json& obj, std::size_t n, const std::string& where) {
  return FinDimCoalgebra(f, n, to_tensor(f, read_entries(f, obj, "comul", {n, n, n}, where), n, n, n),
                         to_vector(f, read_entries(f, obj, "counit", {n}, where), n));
}

WeakBialgebra read_weak(FieldSpec f, const json& obj, const std::string& where) {
  const std::size_t n = read_size(obj, "dim", where);
  std::optional<Matrix> s;
  if (obj.contains("antipode")) s = to_matrix(f, read_entries(f, obj, "antipode", {n, n}, where), n, n);
  return WeakBialgebra(read_algebra(f, obj, n, where), read_coalgebra(f, obj, n, where), std::move(s),
                       read_names(obj, n, where));
}

FrobeniusSystem read_frobenius(FieldSpec f, const json& obj, const std::string& where) {
  const std::size_t n = read_size(obj, "dim", where);
  return FrobeniusSystem{read_algebra(f, obj, n, where), to_vector(f, read_entries(f, obj, "phi", {n}, where), n),
                         to_matrix(f, read_entries(f, obj, "e", {n, n}, where), n, n)};
}

FsBialgebroid read_bialgebroid(FieldSpec f, const json& obj, std::vector<std::string>& base_names) {
  const std::string where = "$";
  const std::size_t n = read_size(obj, "dim", where);
  const json& base = member(obj, "base", where);
  FsBialgebroid l;
  l.base = read_frobenius(f, base, "$.base");
  base_names = read_names(base, l.base.dim(), "$.base");
  const std::size_t m = l.base.dim();
  l.total = read_algebra(f, obj, n, where);
  l.src = LinearMap::from_matrix(to_matrix(f, read_entries(f, obj, "src", {n, m}, where), n, m));
  l.tgt = LinearMap::from_matrix(to_matrix(f, read_entries(f, obj, "tgt", {n, m}, where), n, m));
  Matrix g(f, n * n, n);
  for (const auto& [i, s] : read_entries(f, obj, "gamma", {n, n, n}, where)) g(i[1] * n + i[2], i[0]) = s;
  l.gamma = LinearMap::from_matrix(std::move(g));
  l.counit_c.assign(n, Matrix(f, m, m));
  for (const auto& [i, s] : read_entries(f, obj, "counit", {n, m, m}, where)) l.counit_c[i[0]](i[1], i[2]) = s;
  l.basis_names = read_names(obj, n, where);
  return l;
}

FiniteGroupoid read_groupoid(const json& obj) {
  const std::string where = "$";
  FiniteGroupoid g;
  g.objects = read_size(obj, "objects", where);
  const json& arrows = member(obj, "arrows", where);
  if (!arrows.is_array()) throw SchemaError("$.arrows: expected a list");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const std::string at = "$.arrows[" + std::to_string(a) + "]";
    Arrow x{read_size(arrows[a], "source", at), read_size(arrows[a], "target", at), read_string(arrows[a], "name", at)};
    if (x.source >= g.objects || x.target >= g.objects) throw SchemaError(at + ": object out of range");
    g.arrows.push_back(std::move(x));
  }
  const std::size_t n = g.arrows.size();
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  const json& comp = member(obj, "compose", where);
  if (!comp.is_array()) throw SchemaError("$.compose: expected a list");
  for (std::size_t e = 0; e < comp.size(); ++e) {
    const std::string at = "$.compose[" + std::to_string(e) + "]";
    const json& t = comp[e];
    if (!t.is_array() || t.size() != 3) throw SchemaError(at + ": expected [a, b, a o b]");
    std::size_t v[3];
    for (int k = 0; k < 3; ++k) {
      if (!t[k].is_number_unsigned() || t[k].get<std::size_t>() >= n) throw SchemaError(at + ": arrow out of range");
      v[k] = t[k].get<std::size_t>();
    }
    if (g.compose[v[0]][v[1]]) throw SchemaError(at + ": repeated pair");
    g.compose[v[0]][v[1]] = v[2];
  }
  for (const char* key : {"inverse", "identities"}) {
    const json& list = member(obj, key, where);
    std::vector<std::size_t>& dst = std::string(key) == "inverse" ? g.inverse : g.identities;
    const std::size_t expect = std::string(key) == "inverse" ? n : g.objects;
    if (!list.is_array() || list.size() != expect) {
      throw SchemaError(std::string("$.") + key + ": expected " + std::to_string(expect) + " entries");
    }
    for (const auto& v : list) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) throw SchemaError(std::string("$.") + key + ": arrow out of range");
      dst.push_back(v.get<std::size_t>());
    }
  }
  return g;
}

// ---- writing

json entry(Index idx, const Scalar& s) { return json::array({json(std::move(idx)), s.to_string()}); }

json entries(const Tensor3& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.dim0(); ++i)
    for (std::size_t j = 0; j < t.dim1(); ++j)
      for (std::size_t k = 0; k < t.dim2(); ++k)
        if (!t(i, j, k).is_zero()) out.push_back(entry({i, j, k}, t(i, j, k)));
  return out;
}

json entries(const Vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(entry({i}, v[i]));
  return out;
}

json entries(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.push_back(entry({r, c}, m(r, c)));
  return out;
}

json names(const std::vector<std::string>& given, std::size_t n) {
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < given.size() ? given[i] : "e" + std::to_string(i));
  return out;
}

void put_algebra(json& j, const FinDimAlgebra& a) {
  j["mul"] = entries(a.mul());
  j["unit"] = entries(a.unit());
}

void put_coalgebra(json& j, const FinDimCoalgebra& c) {
  j["comul"] = entries(c.comul());
  j["counit"] = entries(c.counit());
}

json weak_body(const WeakBialgebra& h) {
  json j;
  j["dim"] = h.dim();
  j["basis"] = names(h.basis_names, h.dim());
  put_algebra(j, h.algebra);
  put_coalgebra(j, h.coalgebra);
  if (h.antipode) j["antipode"] = entries(*h.antipode);
  return j;
}

json frobenius_body(const FrobeniusSystem& s, const std::vector<std::string>& basis) {
  json j;
  j["dim"] = s.dim();
  j["basis"] = names(basis, s.dim());
  put_algebra(j, s.algebra);
  j["phi"] = entries(s.phi);
  j["e"] = entries(s.e);
  return j;
}

json header(const std::string& kind) {
  json j;
  j["format"] = "wqg";
  j["version"] = kVersion;
  j["kind"] = kind;
  return j;
}

void append(json& dst, const json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

/// Objects one key per line; lists of lists or objects one element per line.
void emit(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += inner + json(it.key()).dump() + ": ";
      emit(it.value(), indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array() && !j.empty() && (j.front().is_array() || j.front().is_object())) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += inner + j[k].dump();
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

std::string canonical(const json& j) {
  std::string out;
  emit(j, 0, out);
  out += "\n";
  return out;
}

std::string where_in(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string Structure::kind() const {
  static const char* kinds[] = {"algebra",     "coalgebra", "weak-bialgebra", "frobenius-system",
                                "bialgebroid", "groupoid",  "comodule",       "pairing"};
  return kinds[value.index()];
}

Structure parse_structure(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(where_in(text, e.byte) + ": " + e.what());
  }
  const std::string where = "$";
  if (read_string(j, "format", where) != "wqg") throw SchemaError("$.format: expected \"wqg\"");
  if (read_size(j, "version", where) != static_cast<std::size_t>(kVersion)) {
    throw SchemaError("$.version: unsupported version");
  }
  const std::string kind = read_string(j, "kind", where);
  Structure s;
  if (kind == "groupoid") {
    s.value = read_groupoid(j);
    return s;
  }
  FieldSpec f;
  try {
    f = FieldSpec::parse(read_string(j, "field", where));
  } catch (const ParseError& e) {
    throw ParseError(std::string("$.field: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("$.field: ") + e.what());
  }
  if (kind == "algebra") {
    const std::size_t n = read_size(j, "dim", where);
    s.value = read_algebra(f, j, n, where);
    s.basis_names = read_names(j, n, where);
  } else if (kind == "coalgebra") {
    const std::size_t n = read_size(j, "dim", where);
    s.value = read_coalgebra(f, j, n, where);
    s.basis_names = read_names(j, n, where);
  } else if (kind == "weak-bialgebra") {
    s.value = read_weak(f, j, where);
  } else if (kind == "frobenius-system") {
    FrobeniusSystem fs = read_frobenius(f, j, where);
    s.basis_names = read_names(j, fs.dim(), where);
    s.value = std::move(fs);
  } else if (kind == "bialgebroid") {
    s.value = read_bialgebroid(f, j, s.base_names);
  } else if (kind == "comodule") {
    WeakBialgebra h = read_weak(f, member(j, "over", where), "$.over");
    const std::size_t d = read_size(j, "dim", where), n = h.dim();
    Matrix delta(f, n * d, d);
    for (const auto& [i, x] : read_entries(f, j, "coaction", {d, n, d}, where)) delta(i[1] * d + i[2], i[0]) = x;
    s.value = CoalgComodule{std::move(h), d, std::move(delta)};
  } else if (kind == "pairing") {
    const std::size_t r = read_size(j, "rows", where), c = read_size(j, "cols", where);
    s.value = PairingMatrix{to_matrix(f, read_entries(f, j, "tau", {r, c}, where), r, c)};
  } else {
    throw SchemaError("$.kind: unknown kind '" + kind + "'");
  }
  return s;
}

std::string serialize_structure(const Structure& s) {
  json j = header(s.kind());
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteGroupoid>) {
          j["objects"] = v.objects;
          json arrows = json::array();
          for (const auto& a : v.arrows) {
            json x;
            x["name"] = a.name;
            x["source"] = a.source;
            x["target"] = a.target;
            arrows.push_back(std::move(x));
          }
          j["arrows"] = std::move(arrows);
          json comp = json::array();
          for (std::size_t a = 0; a < v.compose.size(); ++a)
            for (std::size_t b = 0; b < v.compose[a].size(); ++b)
              if (v.compose[a][b]) comp.push_back(json::array({a, b, *v.compose[a][b]}));
          j["compose"] = std::move(comp);
          j["inverse"] = v.inverse;
          j["identities"] = v.identities;
        } else {
          if constexpr (std::is_same_v<T, PairingMatrix>) {
            j["field"] = v.tau.field().to_string();
          } else if constexpr (std::is_same_v<T, CoalgComodule>) {
            j["field"] = v.h.field().to_string();
          } else {
            j["field"] = v.field().to_string();
          }
          if constexpr (std::is_same_v<T, FinDimAlgebra>) {
            j["dim"] = v.dim();
            j["basis"] = names(s.basis_names, v.dim());
            put_algebra(j, v);
          } else if constexpr (std::is_same_v<T, FinDimCoalgebra>) {
            j["dim"] = v.dim();
            j["basis"] = names(s.basis_names, v.dim());
            put_coalgebra(j, v);
          } else if constexpr (std::is_same_v<T, WeakBialgebra>) {
            append(j, weak_body(v));
          } else if constexpr (std::is_same_v<T, FrobeniusSystem>) {
            append(j, frobenius_body(v, s.basis_names));
          } else if constexpr (std::is_same_v<T, FsBialgebroid>) {
            const std::size_t n = v.dim(), m = v.base_dim();
            j["dim"] = n;
            j["basis"] = names(v.basis_names, n);
            put_algebra(j, v.total);
            j["base"] = frobenius_body(v.base, s.base_names);
            j["src"] = entries(v.src.matrix);
            j["tgt"] = entries(v.tgt.matrix);
            Tensor3 g(v.field(), n, n, n);
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t a = 0; a < n * n; ++a) g(i, a / n, a % n) = v.gamma.matrix(a, i);
            j["gamma"] = entries(g);
            Tensor3 c(v.field(), n, m, m);
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t r = 0; r < m; ++r)
                for (std::size_t q = 0; q < m; ++q) c(i, r, q) = v.counit_c[i](r, q);
            j["counit"] = entries(c);
          } else if constexpr (std::is_same_v<T, CoalgComodule>) {
            const std::size_t n = v.h.dim(), d = v.dim;
            j["dim"] = d;
            j["over"] = weak_body(v.h);
            Tensor3 t(v.h.field(), d, n, d);
            for (std::size_t p = 0; p < d; ++p)
              for (std::size_t a = 0; a < n * d; ++a) t(p, a / d, a % d) = v.delta(a, p);
            j["coaction"] = entries(t);
          } else if constexpr (std::is_same_v<T, PairingMatrix>) {
            j["rows"] = v.tau.rows();
            j["cols"] = v.tau.cols();
            j["tau"] = entries(v.tau);
          }
        }
      },
      s.value);
  return canonical(j);
}

Structure load_structure(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_structure(text);
}

void save_structure(const Structure& s, const std::string& path) {
  const std::string text = serialize_structure(s);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

std::string report_to_json(const CheckReport& r) {
  json j;
  j["overall"] = r.overall();
  json items = json::array();
  for (const auto& it : r.items) {
    json x;
    x["id"] = it.id;
    x["status"] = it.passed ? "pass" : "fail";
    x["cases"] = it.cases;
    json ws = json::array();
    for (const auto& w : it.witnesses) {
      json y;
      y["indices"] = w.indices;
      json d = json::array();
      for (const auto& s : w.discrepancy) d.push_back(s.to_string());
      y["discrepancy"] = std::move(d);
      if (!w.note.empty()) y["note"] = w.note;
      ws.push_back(std::move(y));
    }
    x["witnesses"] = std::move(ws);
    items.push_back(std::move(x));
  }
  j["items"] = std::move(items);
  return canonical(j);
}

std::string canonical_json(std::string_view text) {
  try {
    return canonical(json::parse(text.begin(), text.end()));
  } catch (const json::parse_error& e) {
    throw ParseError(where_in(text, e.byte) + ": " + e.what());
  }
}

}  // namespace wqg
