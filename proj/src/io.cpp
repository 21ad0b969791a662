#include "fuzzyrel/io.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fuzzyrel::io {

namespace {

class Reader {
 public:
  explicit Reader(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) throw Error(ErrorKind::Parse, path_ + ": cannot open file");
    try {
      root_ = YAML::Load(in);
    } catch (const YAML::ParserException& e) {
      throw Error(ErrorKind::Parse, where(e.mark) + e.msg);
    }
    if (!root_.IsDefined() || root_.IsNull()) throw Error(ErrorKind::Parse, path_ + ": empty document");
  }

  const YAML::Node& root() const { return root_; }

  [[noreturn]] void fail(const YAML::Node& at, const std::string& msg,
                         ErrorKind kind = ErrorKind::Parse) const {
    throw Error(kind, where(at.Mark()) + msg);
  }

  YAML::Node field(const YAML::Node& map, const char* key) const {
    if (!map.IsMap()) fail(map, "expected a mapping");
    YAML::Node n = map[key];
    if (!n.IsDefined() || n.IsNull()) fail(map, std::string("missing field '") + key + "'");
    return n;
  }

  YAML::Node optional_field(const YAML::Node& map, const char* key) const {
    const YAML::Node absent(YAML::NodeType::Undefined);
    if (!map.IsMap()) return absent;
    YAML::Node n = map[key];
    if (!n.IsDefined() || n.IsNull()) return absent;
    return n;
  }

  std::string text(const YAML::Node& n) const {
    if (!n.IsScalar()) fail(n, "expected a scalar");
    return n.Scalar();
  }

  Lattice lattice(const YAML::Node& map) const {
    const YAML::Node n = field(map, "lattice");
    try {
      return Lattice::parse(text(n));
    } catch (const Error& e) {
      fail(n, e.what());
    }
  }

  TruthValue value(const Lattice& lat, const YAML::Node& n) const {
    const std::string s = text(n);
    try {
      return parse_value(lat, s);
    } catch (const Error& e) {
      fail(n, e.what(), e.kind());
    }
  }

  std::vector<TruthValue> vector(const Lattice& lat, const YAML::Node& n, std::size_t size) const {
    if (!n.IsSequence()) fail(n, "expected a list of truth values");
    if (n.size() != size) {
      fail(n, "expected " + std::to_string(size) + " entries, found " + std::to_string(n.size()),
           ErrorKind::ShapeMismatch);
    }
    std::vector<TruthValue> out;
    for (const auto& x : n) out.push_back(value(lat, x));
    return out;
  }

  Labels labels(const YAML::Node& n) const {
    if (!n.IsSequence()) fail(n, "expected a list of labels");
    Labels out;
    for (const auto& x : n) out.push_back(text(x));
    if (out.empty()) fail(n, "label list is empty", ErrorKind::ShapeMismatch);
    return out;
  }

  // Labels from `key` if present, else numbered by the given size.
  Labels labels_or(const YAML::Node& map, const char* key, std::size_t n) const {
    const YAML::Node node = optional_field(map, key);
    if (!node) return numbered_labels(n);
    Labels out = labels(node);
    if (out.size() != n) {
      fail(node, std::string("'") + key + "' has " + std::to_string(out.size()) +
                     " labels but the matrices need " + std::to_string(n),
           ErrorKind::ShapeMismatch);
    }
    return out;
  }

  FuzzyRelation::Rows rows(const Lattice& lat, const YAML::Node& n) const {
    if (!n.IsSequence() || n.size() == 0) fail(n, "expected a non-empty list of rows");
    FuzzyRelation::Rows out;
    for (const auto& row : n) {
      if (!row.IsSequence() || row.size() == 0) fail(row, "expected a non-empty row");
      if (!out.empty() && row.size() != out.front().size()) {
        fail(row, "ragged matrix: row has " + std::to_string(row.size()) + " entries, expected " +
                      std::to_string(out.front().size()));
      }
      auto& r = out.emplace_back();
      for (const auto& x : row) r.push_back(value(lat, x));
    }
    return out;
  }

  FuzzyRelation matrix(const Lattice& lat, const YAML::Node& n, const Labels& dom,
                       const Labels& cod) const {
    auto r = rows(lat, n);
    if (r.size() != dom.size() || r.front().size() != cod.size()) {
      fail(n,
           "expected a " + std::to_string(dom.size()) + "x" + std::to_string(cod.size()) +
               " matrix, found " + std::to_string(r.size()) + "x" + std::to_string(r.front().size()),
           ErrorKind::ShapeMismatch);
    }
    return FuzzyRelation(lat, dom, cod, std::move(r));
  }

 private:
  std::string where(const YAML::Mark& mark) const {
    if (mark.is_null()) return path_ + ": ";
    return path_ + ":" + std::to_string(mark.line + 1) + ":" + std::to_string(mark.column + 1) + ": ";
  }

  std::string path_;
  YAML::Node root_;
};

std::size_t row_count(const Reader& in, const YAML::Node& m) {
  if (!m.IsSequence() || m.size() == 0) in.fail(m, "expected a non-empty list of rows");
  return m.size();
}

std::size_t col_count(const Reader& in, const YAML::Node& m) {
  row_count(in, m);
  if (!m[0].IsSequence() || m[0].size() == 0) in.fail(m[0], "expected a non-empty row");
  return m[0].size();
}

Json labels_json(const Labels& labels) { return Json(labels); }

Json vector_json(const std::vector<TruthValue>& v, const Format& fmt) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar(x, fmt));
  return out;
}

}  // namespace

Instance read_instance(const std::string& path, const std::optional<std::string>& variant) {
  const Reader in(path);
  const YAML::Node& doc = in.root();
  const Lattice lat = in.lattice(doc);

  SystemKind kind{Family::Heterogeneous, 1};
  {
    const YAML::Node tag = variant ? YAML::Node() : in.field(doc, "variant");
    const std::string text = variant ? *variant : in.text(tag);
    try {
      kind = SystemKind::parse(text);
    } catch (const Error& e) {
      if (variant) throw Error(ErrorKind::Parse, "--variant: " + std::string(e.what()));
      in.fail(tag, e.what());
    }
  }
  const bool hetero = kind.family == Family::Heterogeneous;

  const YAML::Node rels = in.field(doc, "relations");
  if (!rels.IsSequence() || rels.size() == 0) in.fail(rels, "expected a non-empty list of relations");
  const YAML::Node bound = in.field(doc, hetero ? "Z" : "W");
  const std::size_t na = row_count(in, bound);
  const Labels a = in.labels_or(doc, "A", na);
  const Labels b = hetero ? in.labels_or(doc, "B", col_count(in, bound)) : a;

  std::vector<FuzzyRelation> v, w;
  for (const auto& item : rels) {
    v.push_back(in.matrix(lat, in.field(item, "V"), a, a));
    if (hetero) w.push_back(in.matrix(lat, in.field(item, "W"), b, b));
  }

  SolveOptions options;
  if (const YAML::Node opts = in.optional_field(doc, "options")) {
    if (const YAML::Node cap = in.optional_field(opts, "max_iterations")) {
      try {
        const long long n = std::stoll(in.text(cap));
        if (n < 1) throw std::out_of_range("non-positive");
        options.max_iterations = static_cast<std::size_t>(n);
      } catch (const std::logic_error&) {
        in.fail(cap, "max_iterations must be a positive integer");
      }
    }
  }

  FuzzyRelation z = in.matrix(lat, bound, a, b);
  if (hetero) {
    return {WeaklyLinearSystem::heterogeneous(kind.variant, std::move(v), std::move(w), std::move(z)),
            options};
  }
  return {WeaklyLinearSystem::homogeneous(kind.variant, std::move(v), std::move(z)), options};
}

FuzzyRelation read_relation(const std::string& path, const Lattice& lattice, const Labels& domain,
                            const Labels& codomain) {
  const Reader in(path);
  YAML::Node m = in.root();
  if (m.IsMap()) {
    for (const char* key : {"solution", "R", "Z"}) {
      if (YAML::Node n = in.optional_field(m, key)) {
        m = n;
        break;
      }
    }
    if (m.IsMap()) in.fail(m, "expected a matrix or a 'solution' field");
  }
  return in.matrix(lattice, m, domain, codomain);
}

QuotientRequest read_quotient_request(const std::string& path) {
  const Reader in(path);
  const YAML::Node& doc = in.root();
  const Lattice lat = in.lattice(doc);
  const YAML::Node rels = in.field(doc, "relations");
  if (!rels.IsSequence() || rels.size() == 0) in.fail(rels, "expected a non-empty list of relations");
  const Labels a = in.labels_or(doc, "A", row_count(in, rels[0]));
  std::vector<FuzzyRelation> v;
  for (const auto& m : rels) v.push_back(in.matrix(lat, m, a, a));
  FuzzyRelationalSystem sys(lat, a, std::move(v));
  const YAML::Node e = in.optional_field(doc, "E");
  if (!e) return {std::move(sys), FuzzyEquivalence::identity(lat, a)};
  try {
    return {std::move(sys), FuzzyEquivalence(in.matrix(lat, e, a, a))};
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::NotAnEquivalence) throw;
    in.fail(e, err.what(), err.kind());
  }
}

FuzzyAutomaton read_automaton(const std::string& path) {
  const Reader in(path);
  const YAML::Node& doc = in.root();
  const Lattice lat = in.lattice(doc);
  const Labels states = in.labels(in.field(doc, "states"));
  const YAML::Node letters = in.field(doc, "alphabet");
  std::vector<std::string> alphabet;
  if (!letters.IsSequence()) in.fail(letters, "expected a list of symbols");
  for (const auto& x : letters) alphabet.push_back(in.text(x));

  const YAML::Node trans = in.field(doc, "transitions");
  if (!trans.IsMap()) in.fail(trans, "expected a mapping from symbols to matrices");
  if (trans.size() != alphabet.size()) {
    in.fail(trans, "one transition matrix per alphabet symbol is required", ErrorKind::ShapeMismatch);
  }
  std::vector<FuzzyRelation> deltas;
  for (const auto& x : alphabet) {
    const YAML::Node m = trans[x];
    if (!m.IsDefined() || m.IsNull()) in.fail(trans, "no transition matrix for symbol '" + x + "'");
    deltas.push_back(in.matrix(lat, m, states, states));
  }
  auto initial = in.vector(lat, in.field(doc, "initial"), states.size());
  auto terminal = in.vector(lat, in.field(doc, "terminal"), states.size());
  return FuzzyAutomaton(lat, states, std::move(alphabet), std::move(deltas), std::move(initial),
                        std::move(terminal));
}

std::string scalar(const TruthValue& v, const Format& fmt) {
  return fmt.decimal ? v.to_decimal_string() : v.to_string();
}

Json matrix_json(const FuzzyRelation& r, const Format& fmt) {
  Json out = Json::array();
  for (std::size_t a = 0; a < r.rows(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < r.cols(); ++b) row.push_back(scalar(r(a, b), fmt));
    out.push_back(std::move(row));
  }
  return out;
}

Json report_json(const WeaklyLinearSystem& system, const SolveReport& report, const Format& fmt) {
  Json out;
  out["lattice"] = system.lattice().name();
  out["variant"] = system.kind().name();
  out["A"] = labels_json(system.a_labels());
  out["B"] = labels_json(system.b_labels());
  out["solution"] = matrix_json(report.solution, fmt);
  out["iterations"] = report.iterations;
  out["status"] = to_string(report.status);
  out["verified"] = report.verified;
  return out;
}

Json quotient_json(const QuotientSystem& q, const Format& fmt) {
  const FactorSet& f = q.factor;
  Json out;
  out["lattice"] = q.system.lattice().name();
  out["A"] = labels_json(q.system.carrier());
  Json classes = Json::array();
  for (std::size_t c = 0; c < f.size(); ++c) {
    Json members = Json::array();
    for (std::size_t a : f.classes()[c]) members.push_back(f.source()[a]);
    classes.push_back(Json{{"label", q.system.carrier()[c]},
                           {"representative", f.source()[f.representative(c)]},
                           {"members", std::move(members)}});
  }
  out["classes"] = std::move(classes);
  Json rels = Json::array();
  for (const auto& r : q.system.relations()) rels.push_back(matrix_json(r, fmt));
  out["relations"] = std::move(rels);
  return out;
}

Json automaton_json(const FuzzyAutomaton& m, const Format& fmt) {
  Json out;
  out["lattice"] = m.lattice().name();
  out["states"] = labels_json(m.states());
  out["alphabet"] = Json(m.alphabet());
  Json trans = Json::object();
  for (std::size_t i = 0; i < m.alphabet().size(); ++i) {
    trans[m.alphabet()[i]] = matrix_json(m.transitions()[i], fmt);
  }
  out["transitions"] = std::move(trans);
  out["initial"] = vector_json(m.initial(), fmt);
  out["terminal"] = vector_json(m.terminal(), fmt);
  return out;
}

namespace {

bool flat(const Json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
}

// Like dump(2), but arrays of scalars stay on one line.
void write(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (!j.is_structured() || flat(j) || j.empty()) {
    out << j.dump();
    return;
  }
  const bool obj = j.is_object();
  out << (obj ? "{\n" : "[\n");
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out << ",\n";
    first = false;
    out << pad;
    if (obj) out << Json(it.key()).dump() << ": ";
    write(out, *it, indent + 2);
  }
  out << "\n" << std::string(static_cast<std::size_t>(indent), ' ') << (obj ? "}" : "]");
}

}  // namespace

std::string dump(const Json& doc) {
  std::ostringstream out;
  write(out, doc, 0);
  out << "\n";
  return out.str();
}

}  // namespace fuzzyrel::io
