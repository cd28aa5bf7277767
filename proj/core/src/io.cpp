#include "trilie/io.hpp"

#include "trilie/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace trilie {

using json = nlohmann::ordered_json;

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

}  // namespace

std::string_view kind_name(const Object& object) {
  return std::visit(Overloaded{
                        [](const LieAlgebra&) { return std::string_view("lie"); },
                        [](const ThreeLieAlgebra&) { return std::string_view("3lie"); },
                        [](const RepresentationLie&) { return std::string_view("rep_lie"); },
                        [](const Representation3&) { return std::string_view("rep3"); },
                        [](const TwoCocycleLie&) { return std::string_view("cocycle_lie"); },
                        [](const TwoCocycle3&) { return std::string_view("cocycle3"); },
                        [](const LinearMap&) { return std::string_view("linmap"); },
                        [](const TraceMap&) { return std::string_view("trace"); },
                        [](const TwistedOperator&) { return std::string_view("twisted_op"); },
                        [](const LieTwistedOperator&) { return std::string_view("twisted_op_lie"); },
                        [](const ThreeNSLieAlgebra&) { return std::string_view("3ns"); },
                        [](const NSLieAlgebra&) { return std::string_view("ns"); },
                        [](const DeformationFamily&) { return std::string_view("deformation_family"); },
                        [](const EquivalencePair&) { return std::string_view("equivalence_pair"); },
                    },
                    object);
}

void Workspace::add(std::string name, Object value, std::map<std::string, std::string> refs) {
  if (name.empty()) throw ParseError("object name must not be empty", "");
  if (contains(name)) throw ParseError("duplicate object name '" + name + "'", "");
  entries_.push_back(Entry{std::move(name), std::move(value), std::move(refs)});
}

bool Workspace::contains(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return true;
  }
  return false;
}

const Entry& Workspace::entry(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw UnresolvedReference("no object named '" + std::string(name) + "'");
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].name != b.entries_[i].name || !(a.entries_[i].value == b.entries_[i].value)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Raw {
  json body;
  std::string location;
};

class Parser {
 public:
  explicit Parser(Workspace& ws) : ws_(ws) {}

  void collect(const std::string& text, const std::string& source) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), source);
    }
    if (!doc.is_object()) throw ParseError("document must be an object", source);
    const json& version = field(doc, "format_version", source);
    if (!version.is_number_integer() || version.get<long>() != kFormatVersion) {
      throw ParseError("unsupported format_version", source + ".format_version");
    }
    const json& objects = field(doc, "objects", source);
    if (!objects.is_array()) throw ParseError("objects must be an array", source + ".objects");
    for (std::size_t i = 0; i < objects.size(); ++i) {
      const std::string loc = source + ".objects[" + std::to_string(i) + "]";
      const json& obj = objects[i];
      if (!obj.is_object()) throw ParseError("object entry must be a JSON object", loc);
      const std::string name = string_field(obj, "name", loc);
      if (name.empty()) throw ParseError("object name must not be empty", loc + ".name");
      if (raw_.count(name) != 0 || ws_.contains(name)) throw ParseError("duplicate object name '" + name + "'", loc);
      string_field(obj, "kind", loc);
      raw_.emplace(name, Raw{obj, loc});
      order_.push_back(name);
    }
  }

  void resolve_all() {
    for (const auto& name : order_) resolve(name);
  }

 private:
  static const json& field(const json& obj, const char* key, const std::string& loc) {
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'", loc);
    return *it;
  }

  static std::string string_field(const json& obj, const char* key, const std::string& loc) {
    const json& v = field(obj, key, loc);
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string", loc + "." + key);
    return v.get<std::string>();
  }

  static std::size_t count_field(const json& obj, const char* key, const std::string& loc) {
    const json& v = field(obj, key, loc);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0)) {
      throw ParseError(std::string("field '") + key + "' must be a non-negative integer", loc + "." + key);
    }
    return v.get<std::size_t>();
  }

  static Rational rational(const json& v, const std::string& loc) {
    if (v.is_string()) {
      try {
        return Rational::parse(v.get<std::string>());
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + v.get<std::string>() + "'", loc);
      }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw ParseError("rational must be a \"p/q\" string", loc);
  }

  static Vec vec(const json& v, std::size_t dim, const std::string& loc) {
    if (!v.is_array()) throw ParseError("vector must be an array", loc);
    if (v.size() != dim) {
      throw ShapeMismatch(loc + ": expected " + std::to_string(dim) + " entries, got " + std::to_string(v.size()));
    }
    Vec out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = rational(v[i], loc + "[" + std::to_string(i) + "]");
    return out;
  }

  static Mat matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& loc) {
    if (!v.is_array()) throw ParseError("matrix must be an array of rows", loc);
    if (v.size() != rows) {
      throw ShapeMismatch(loc + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
    }
    Mat out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) out.set_row(r, vec(v[r], cols, loc + "[" + std::to_string(r) + "]"));
    return out;
  }

  /// Index list of the given arity in [0, dim). `increasing` = how many leading
  /// slots must be strictly increasing.
  static std::vector<Index> args(const json& entry, std::size_t arity, std::size_t dim, std::size_t increasing,
                                 const std::string& loc) {
    const std::string aloc = loc + ".args";
    const json& a = field(entry, "args", loc);
    if (!a.is_array() || a.size() != arity) {
      throw ParseError("args must list " + std::to_string(arity) + " indices", aloc);
    }
    std::vector<Index> out;
    for (std::size_t i = 0; i < arity; ++i) {
      if (!a[i].is_number_integer() || a[i].get<long>() < 0) throw ParseError("index must be a non-negative integer", aloc);
      const auto idx = a[i].get<std::size_t>();
      if (idx >= dim) throw ShapeMismatch(aloc + ": index " + std::to_string(idx) + " out of range");
      out.push_back(idx);
    }
    for (std::size_t i = 1; i < increasing; ++i) {
      if (out[i - 1] == out[i]) throw ParseError("repeated index", aloc);
      if (out[i - 1] > out[i]) throw ParseError("indices must be strictly increasing", aloc);
    }
    return out;
  }

  static const json& list_field(const json& obj, const char* key, const std::string& loc) {
    const json& v = field(obj, key, loc);
    if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array", loc + "." + key);
    return v;
  }

  /// Iterates over sparse entries, rejecting duplicate argument tuples.
  template <class F>
  static void sparse(const json& obj, const char* key, const std::string& loc, std::size_t arity, std::size_t dim,
                     std::size_t increasing, F&& f) {
    const json& list = list_field(obj, key, loc);
    std::set<std::vector<Index>> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string eloc = loc + "." + key + "[" + std::to_string(i) + "]";
      if (!list[i].is_object()) throw ParseError("entry must be an object", eloc);
      auto idx = args(list[i], arity, dim, increasing, eloc);
      if (!seen.insert(idx).second) throw ParseError("duplicate entry", eloc);
      f(idx, list[i], eloc);
    }
  }

  // Reference-or-inline fields.

  Object reference(const json& v, std::string_view expected, const std::string& loc, std::string* ref_name) {
    if (v.is_string()) {
      const std::string name = v.get<std::string>();
      const Object& target = resolve_ref(name, loc);
      if (kind_name(target) != expected) {
        throw UnresolvedReference(loc + ": '" + name + "' is " + std::string(kind_name(target)) + ", expected " +
                                  std::string(expected));
      }
      if (ref_name != nullptr) *ref_name = name;
      return target;
    }
    if (v.is_object()) {
      if (const auto it = v.find("kind"); it != v.end() && (!it->is_string() || it->get<std::string>() != expected)) {
        throw ParseError("inline object must have kind " + std::string(expected), loc);
      }
      return build(std::string(expected), v, loc);
    }
    throw ParseError("expected an object name or an inline object", loc);
  }

  Mat map_field(const json& v, std::size_t rows, std::size_t cols, const std::string& loc, std::string* ref_name) {
    if (v.is_array()) return matrix(v, rows, cols, loc);
    Mat m = std::get<LinearMap>(reference(v, "linmap", loc, ref_name));
    if (m.rows() != rows || m.cols() != cols) throw ShapeMismatch(loc + ": linear map has the wrong shape");
    return m;
  }

  const Object& resolve_ref(const std::string& name, const std::string& loc) {
    if (ws_.contains(name)) return ws_.entry(name).value;
    if (raw_.count(name) == 0) throw UnresolvedReference(loc + ": no object named '" + name + "'");
    resolve(name);
    return ws_.entry(name).value;
  }

  void resolve(const std::string& name) {
    if (ws_.contains(name)) return;
    if (!active_.insert(name).second) throw UnresolvedReference("cyclic reference through '" + name + "'");
    const Raw& raw = raw_.at(name);
    std::map<std::string, std::string> refs;
    Object value = build(raw.body.at("kind").get<std::string>(), raw.body, raw.location, &refs);
    active_.erase(name);
    ws_.add(name, std::move(value), std::move(refs));
  }

  Object build(const std::string& kind, const json& o, const std::string& loc,
               std::map<std::string, std::string>* refs = nullptr) {
    auto remember = [&](const std::string& key, const std::string& target) {
      if (refs != nullptr && !target.empty()) (*refs)[key] = target;
    };

    if (kind == "lie" || kind == "3lie") {
      const std::size_t dim = count_field(o, "dim", loc);
      const std::size_t arity = kind == "lie" ? 2 : 3;
      Alternating<Vec> table(dim, arity, Vec(dim));
      sparse(o, "brackets", loc, arity, dim, arity,
             [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
               table.set(idx, vec(field(e, "value", eloc), dim, eloc + ".value"));
             });
      if (kind == "lie") {
        LieAlgebra g;
        g.table = std::move(table);
        return g;
      }
      ThreeLieAlgebra g;
      g.table = std::move(table);
      return g;
    }
    if (kind == "rep_lie" || kind == "rep3") {
      const std::size_t n = count_field(o, "algebra_dim", loc);
      const std::size_t m = count_field(o, "space_dim", loc);
      if (kind == "rep_lie") {
        RepresentationLie rho(n, m);
        sparse(o, "ops", loc, 1, n, 1, [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
          rho.ops[idx[0]] = matrix(field(e, "matrix", eloc), m, m, eloc + ".matrix");
        });
        return rho;
      }
      Representation3 rho(n, m);
      sparse(o, "ops", loc, 2, n, 2, [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
        rho.set(idx[0], idx[1], matrix(field(e, "matrix", eloc), m, m, eloc + ".matrix"));
      });
      return rho;
    }
    if (kind == "cocycle_lie" || kind == "cocycle3") {
      const std::size_t n = count_field(o, "algebra_dim", loc);
      const std::size_t m = count_field(o, "space_dim", loc);
      const std::size_t arity = kind == "cocycle_lie" ? 2 : 3;
      Alternating<Vec> values(n, arity, Vec(m));
      sparse(o, "values", loc, arity, n, arity,
             [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
               values.set(idx, vec(field(e, "value", eloc), m, eloc + ".value"));
             });
      if (kind == "cocycle_lie") {
        TwoCocycleLie t;
        t.values = std::move(values);
        return t;
      }
      TwoCocycle3 t;
      t.values = std::move(values);
      return t;
    }
    if (kind == "linmap") {
      const std::size_t rows = count_field(o, "rows", loc);
      const std::size_t cols = count_field(o, "cols", loc);
      return matrix(field(o, "matrix", loc), rows, cols, loc + ".matrix");
    }
    if (kind == "trace") {
      const json& c = list_field(o, "coeffs", loc);
      return TraceMap{vec(c, c.size(), loc + ".coeffs")};
    }
    if (kind == "twisted_op") {
      std::string ra, rr, rc, rm;
      auto g = std::get<ThreeLieAlgebra>(reference(field(o, "algebra", loc), "3lie", loc + ".algebra", &ra));
      auto rho = std::get<Representation3>(reference(field(o, "rep", loc), "rep3", loc + ".rep", &rr));
      auto theta = std::get<TwoCocycle3>(reference(field(o, "cocycle", loc), "cocycle3", loc + ".cocycle", &rc));
      try {
        require_shapes(g, rho, theta);
      } catch (const ShapeMismatch& e) {
        throw ShapeMismatch(loc + ": " + e.what());
      }
      Mat t = map_field(field(o, "map", loc), g.dim(), rho.space_dim, loc + ".map", &rm);
      remember("algebra", ra);
      remember("rep", rr);
      remember("cocycle", rc);
      remember("map", rm);
      return TwistedOperator{std::move(g), std::move(rho), std::move(theta), std::move(t)};
    }
    if (kind == "twisted_op_lie") {
      std::string ra, rr, rc, rm;
      auto g = std::get<LieAlgebra>(reference(field(o, "algebra", loc), "lie", loc + ".algebra", &ra));
      auto rho = std::get<RepresentationLie>(reference(field(o, "rep", loc), "rep_lie", loc + ".rep", &rr));
      auto theta = std::get<TwoCocycleLie>(reference(field(o, "cocycle", loc), "cocycle_lie", loc + ".cocycle", &rc));
      try {
        require_shapes(g, rho, theta);
      } catch (const ShapeMismatch& e) {
        throw ShapeMismatch(loc + ": " + e.what());
      }
      Mat t = map_field(field(o, "map", loc), g.dim(), rho.space_dim, loc + ".map", &rm);
      remember("algebra", ra);
      remember("rep", rr);
      remember("cocycle", rc);
      remember("map", rm);
      return LieTwistedOperator{std::move(g), std::move(rho), std::move(theta), std::move(t)};
    }
    if (kind == "3ns") {
      const std::size_t dim = count_field(o, "dim", loc);
      ThreeNSLieAlgebra a(dim);
      sparse(o, "curly", loc, 3, dim, 2, [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
        a.set_curly(idx[0], idx[1], idx[2], vec(field(e, "value", eloc), dim, eloc + ".value"));
      });
      sparse(o, "skew", loc, 3, dim, 3, [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
        a.set_skew(idx[0], idx[1], idx[2], vec(field(e, "value", eloc), dim, eloc + ".value"));
      });
      return a;
    }
    if (kind == "ns") {
      const std::size_t dim = count_field(o, "dim", loc);
      NSLieAlgebra a(dim);
      sparse(o, "curly", loc, 2, dim, 0, [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
        a.set_curly(idx[0], idx[1], vec(field(e, "value", eloc), dim, eloc + ".value"));
      });
      sparse(o, "skew", loc, 2, dim, 2, [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
        a.set_skew(idx[0], idx[1], vec(field(e, "value", eloc), dim, eloc + ".value"));
      });
      return a;
    }
    if (kind == "deformation_family") {
      std::string ro;
      auto op = std::get<TwistedOperator>(reference(field(o, "operator", loc), "twisted_op", loc + ".operator", &ro));
      remember("operator", ro);
      DeformationFamily fam{op, {}};
      const json& terms = list_field(o, "terms", loc);
      for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string rt;
        fam.terms.push_back(map_field(terms[i], op.algebra_dim(), op.space_dim(),
                                      loc + ".terms[" + std::to_string(i) + "]", &rt));
        remember("terms." + std::to_string(i), rt);
      }
      return fam;
    }
    if (kind == "equivalence_pair") {
      const std::size_t dim = count_field(o, "dim", loc);
      EquivalencePair pair{ZeroCochain(dim), {}, {}};
      sparse(o, "bivector", loc, 2, dim, 2, [&](const std::vector<Index>& idx, const json& e, const std::string& eloc) {
        pair.x.set(idx[0], idx[1], rational(field(e, "value", eloc), eloc + ".value"));
      });
      auto square_list = [&](const char* key, std::vector<LinearMap>& out, bool on_space) {
        const auto it = o.find(key);
        if (it == o.end()) return;
        if (!it->is_array()) throw ParseError(std::string("field '") + key + "' must be an array", loc + "." + key);
        for (std::size_t i = 0; i < it->size(); ++i) {
          const std::string mloc = loc + "." + key + "[" + std::to_string(i) + "]";
          const json& mj = (*it)[i];
          if (!mj.is_array()) throw ParseError("matrix must be an array of rows", mloc);
          const std::size_t n = on_space ? mj.size() : dim;
          out.push_back(matrix(mj, n, n, mloc));
        }
      };
      square_list("higher_phi", pair.higher_phi, false);
      square_list("higher_psi", pair.higher_psi, true);
      return pair;
    }
    throw ParseError("unknown kind '" + kind + "'", loc + ".kind");
  }

  Workspace& ws_;
  std::map<std::string, Raw> raw_;
  std::vector<std::string> order_;
  std::set<std::string> active_;
};

}  // namespace

Workspace parse_workspace_texts(const std::vector<std::string>& texts, const std::vector<std::string>& sources) {
  Workspace ws;
  Parser parser(ws);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    parser.collect(texts[i], i < sources.size() ? sources[i] : "<input " + std::to_string(i) + ">");
  }
  parser.resolve_all();
  return ws;
}

Workspace parse_workspace_text(const std::string& text, const std::string& source) {
  return parse_workspace_texts({text}, {source});
}

Workspace parse_workspace(const std::vector<std::filesystem::path>& files) {
  std::vector<std::string> texts;
  std::vector<std::string> sources;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw ParseError("cannot open file", f.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    texts.push_back(buf.str());
    sources.push_back(f.string());
  }
  return parse_workspace_texts(texts, sources);
}

// ---------------------------------------------------------- serialization

namespace {

json rational_json(const Rational& r) { return r.str(); }

json vec_json(const Vec& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_json(v[i]));
  return out;
}

json matrix_json(const Mat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
  return out;
}

json args_json(const std::vector<Index>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i);
  return out;
}

template <class Value>
json sparse_json(const Alternating<Value>& table, const char* value_key) {
  json out = json::array();
  const auto& tuples = table.tuples();
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const Value& v = table.stored(r);
    if (v.is_zero()) continue;
    json e;
    e["args"] = args_json(tuples[r]);
    if constexpr (std::is_same_v<Value, Mat>) {
      e[value_key] = matrix_json(v);
    } else {
      e[value_key] = vec_json(v);
    }
    out.push_back(std::move(e));
  }
  return out;
}

json object_json(const Object& object, const std::map<std::string, std::string>& refs);

json ref_or_inline(const std::map<std::string, std::string>& refs, const std::string& key, const Object& inline_value) {
  if (const auto it = refs.find(key); it != refs.end()) return it->second;
  json o;
  o["kind"] = std::string(kind_name(inline_value));
  const json body = object_json(inline_value, {});
  for (const auto& [k, v] : body.items()) o[k] = v;
  return o;
}

json map_ref_or_inline(const std::map<std::string, std::string>& refs, const std::string& key, const Mat& m) {
  if (const auto it = refs.find(key); it != refs.end()) return it->second;
  return matrix_json(m);
}

json object_json(const Object& object, const std::map<std::string, std::string>& refs) {
  json o;
  std::visit(Overloaded{
                 [&](const LieAlgebra& g) {
                   o["dim"] = g.dim();
                   o["brackets"] = sparse_json(g.table, "value");
                 },
                 [&](const ThreeLieAlgebra& g) {
                   o["dim"] = g.dim();
                   o["brackets"] = sparse_json(g.table, "value");
                 },
                 [&](const RepresentationLie& rho) {
                   o["algebra_dim"] = rho.algebra_dim();
                   o["space_dim"] = rho.space_dim;
                   json ops = json::array();
                   for (std::size_t i = 0; i < rho.ops.size(); ++i) {
                     if (rho.ops[i].is_zero()) continue;
                     json e;
                     e["args"] = json::array({i});
                     e["matrix"] = matrix_json(rho.ops[i]);
                     ops.push_back(std::move(e));
                   }
                   o["ops"] = std::move(ops);
                 },
                 [&](const Representation3& rho) {
                   o["algebra_dim"] = rho.algebra_dim();
                   o["space_dim"] = rho.space_dim;
                   o["ops"] = sparse_json(rho.ops, "matrix");
                 },
                 [&](const TwoCocycleLie& t) {
                   o["algebra_dim"] = t.algebra_dim();
                   o["space_dim"] = t.space_dim();
                   o["values"] = sparse_json(t.values, "value");
                 },
                 [&](const TwoCocycle3& t) {
                   o["algebra_dim"] = t.algebra_dim();
                   o["space_dim"] = t.space_dim();
                   o["values"] = sparse_json(t.values, "value");
                 },
                 [&](const LinearMap& m) {
                   o["rows"] = m.rows();
                   o["cols"] = m.cols();
                   o["matrix"] = matrix_json(m);
                 },
                 [&](const TraceMap& tau) { o["coeffs"] = vec_json(tau.coeffs); },
                 [&](const TwistedOperator& op) {
                   o["algebra"] = ref_or_inline(refs, "algebra", op.algebra);
                   o["rep"] = ref_or_inline(refs, "rep", op.rep);
                   o["cocycle"] = ref_or_inline(refs, "cocycle", op.cocycle);
                   o["map"] = map_ref_or_inline(refs, "map", op.map);
                 },
                 [&](const LieTwistedOperator& op) {
                   o["algebra"] = ref_or_inline(refs, "algebra", op.algebra);
                   o["rep"] = ref_or_inline(refs, "rep", op.rep);
                   o["cocycle"] = ref_or_inline(refs, "cocycle", op.cocycle);
                   o["map"] = map_ref_or_inline(refs, "map", op.map);
                 },
                 [&](const ThreeNSLieAlgebra& a) {
                   const std::size_t d = a.dim();
                   o["dim"] = d;
                   json curly = json::array();
                   for (const auto& p : combinations(d, 2)) {
                     for (Index k = 0; k < d; ++k) {
                       const Vec v = a.basis_curly(p[0], p[1], k);
                       if (v.is_zero()) continue;
                       json e;
                       e["args"] = json::array({p[0], p[1], k});
                       e["value"] = vec_json(v);
                       curly.push_back(std::move(e));
                     }
                   }
                   o["curly"] = std::move(curly);
                   o["skew"] = sparse_json(a.skew.table, "value");
                 },
                 [&](const NSLieAlgebra& a) {
                   const std::size_t d = a.dim();
                   o["dim"] = d;
                   json curly = json::array();
                   for (Index i = 0; i < d; ++i) {
                     for (Index j = 0; j < d; ++j) {
                       const Vec v = a.curly.ops[i].column(j);
                       if (v.is_zero()) continue;
                       json e;
                       e["args"] = json::array({i, j});
                       e["value"] = vec_json(v);
                       curly.push_back(std::move(e));
                     }
                   }
                   o["curly"] = std::move(curly);
                   o["skew"] = sparse_json(a.skew.table, "value");
                 },
                 [&](const DeformationFamily& fam) {
                   o["operator"] = ref_or_inline(refs, "operator", fam.base);
                   json terms = json::array();
                   for (std::size_t i = 0; i < fam.terms.size(); ++i) {
                     terms.push_back(map_ref_or_inline(refs, "terms." + std::to_string(i), fam.terms[i]));
                   }
                   o["terms"] = std::move(terms);
                 },
                 [&](const EquivalencePair& pair) {
                   o["dim"] = pair.x.dim();
                   json biv = json::array();
                   for (const auto& p : combinations(pair.x.dim(), 2)) {
                     const Rational a = pair.x.at(p[0], p[1]);
                     if (a.is_zero()) continue;
                     json e;
                     e["args"] = json::array({p[0], p[1]});
                     e["value"] = rational_json(a);
                     biv.push_back(std::move(e));
                   }
                   o["bivector"] = std::move(biv);
                   json phi = json::array();
                   for (const auto& m : pair.higher_phi) phi.push_back(matrix_json(m));
                   json psi = json::array();
                   for (const auto& m : pair.higher_psi) psi.push_back(matrix_json(m));
                   o["higher_phi"] = std::move(phi);
                   o["higher_psi"] = std::move(psi);
                 },
             },
             object);
  return o;
}

}  // namespace

std::string serialize_workspace(const Workspace& ws) {
  json doc;
  doc["format_version"] = kFormatVersion;
  json objects = json::array();
  for (const auto& e : ws.entries()) {
    json o;
    o["kind"] = std::string(kind_name(e.value));
    o["name"] = e.name;
    const json body = object_json(e.value, e.refs);
    for (const auto& [k, v] : body.items()) o[k] = v;
    objects.push_back(std::move(o));
  }
  doc["objects"] = std::move(objects);
  return doc.dump(2) + "\n";
}

void write_workspace(const Workspace& ws, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file", path.string());
  out << serialize_workspace(ws);
}

}  // namespace trilie
