#include "groupent/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "groupent/error.hpp"

namespace groupent {

// Defined in the build-generated bundled_groups.cpp.
const std::vector<std::pair<std::string, std::string>>& bundled_group_sources();

namespace {

std::string at_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw FormatError(path.empty() ? "document must be a JSON object" : path + ": expected object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(at_path(path, key) + ": missing field");
  return *it;
}

const Json& array_field(const Json& obj, const char* key, const std::string& path) {
  const Json& a = field(obj, key, path);
  if (!a.is_array()) throw FormatError(at_path(path, key) + ": expected array");
  return a;
}

int get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw FormatError(path + ": expected integer");
  return j.get<int>();
}

double get_double(const Json& j, const std::string& path) {
  if (!j.is_number()) throw FormatError(path + ": expected number");
  return j.get<double>();
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw FormatError(path + ": expected string");
  return j.get<std::string>();
}

std::vector<int> get_int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw FormatError(path + ": expected array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], at_index(path, i)));
  return out;
}

std::vector<int> parse_mul(const Json& j, int order, const std::string& path) {
  if (!j.is_array()) throw FormatError(path + ": expected array");
  if (!j.empty() && j[0].is_array()) {
    if (static_cast<int>(j.size()) != order) throw FormatError(path + ": expected " + std::to_string(order) + " rows");
    std::vector<int> flat;
    for (std::size_t r = 0; r < j.size(); ++r) {
      const auto row = get_int_list(j[r], at_index(path, r));
      if (static_cast<int>(row.size()) != order) {
        throw FormatError(at_index(path, r) + ": expected " + std::to_string(order) + " entries");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  }
  return get_int_list(j, path);
}

std::string domain_name(const Json& d, const std::string& path) {
  if (d.is_string()) return d.get<std::string>();
  if (d.is_array() && d.size() == 2) {
    return domain_name(d[0], at_index(path, 0)) + "x" + domain_name(d[1], at_index(path, 1));
  }
  throw FormatError(path + ": expected a group name or a pair of group names");
}

TablePtr resolve_domain(const Json& d, const std::string& path) {
  if (d.is_string()) return resolve_group(d.get<std::string>());
  if (d.is_array() && d.size() == 2) {
    return product_group(resolve_domain(d[0], at_index(path, 0)), resolve_domain(d[1], at_index(path, 1)));
  }
  throw FormatError(path + ": expected a group name or a pair of group names");
}

TablePtr domain_of(const Json& doc, const TablePtr& expected) {
  const Json& d = field(doc, "domain", "");
  if (!expected) return resolve_domain(d, "domain");
  const std::string name = domain_name(d, "domain");
  if (name != expected->name()) {
    throw DomainMismatch("document domain '" + name + "' does not match group '" + expected->name() + "'");
  }
  return expected;
}

// A group reference inside a map document: the name when it resolves to the
// same table, the full group document otherwise.
Json group_ref(const TablePtr& t) {
  try {
    if (resolve_group(t->name())->same_as(*t)) return t->name();
  } catch (const Error&) {
  }
  return group_to_json(*t);
}

TablePtr parse_group_ref(const Json& j, const std::string& path) {
  if (j.is_string()) return resolve_group(j.get<std::string>());
  if (j.is_object()) return parse_group(j);
  throw FormatError(path + ": expected a group name or group document");
}

int parse_element(const Json& j, const IrrepTable& t, const std::string& path) {
  if (j.is_string()) {
    const auto& labels = t.group().labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == j.get<std::string>()) return static_cast<int>(i);
    }
    throw DomainMismatch(path + ": group '" + t.name() + "' has no element '" + j.get<std::string>() + "'");
  }
  const int g = get_int(j, path);
  if (g < 0 || g >= t.order()) throw ShapeMismatch(path + ": element index out of range");
  return g;
}

Measure parse_measure(const Json& j, const IrrepTable& t, const std::string& path) {
  if (!j.is_array()) throw FormatError(path + ": expected array");
  Measure mu;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at_index(path, i);
    mu.push_back({parse_complex(field(j[i], "weight", p), at_path(p, "weight")),
                  parse_element(field(j[i], "element", p), t, at_path(p, "element"))});
  }
  return mu;
}

Json measure_to_json(const Measure& mu) {
  Json out = Json::array();
  for (const auto& pt : mu) out.push_back({{"element", pt.element}, {"weight", complex_to_json(pt.weight)}});
  return out;
}

std::string name_or_empty(const Json& doc) {
  auto it = doc.find("name");
  return it != doc.end() && it->is_string() ? it->get<std::string>() : std::string{};
}

Json block_to_json(const BlockVerdict& b) {
  Json j;
  j["block"] = b.label;
  j["left_dim"] = b.left_dim;
  j["right_dim"] = b.right_dim;
  j["verdict"] = to_string(b.verdict);
  j["method"] = to_string(b.method);
  j["min_pt_eigenvalue"] = b.min_pt_eigenvalue;
  return j;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, TablePtr>& bundled_cache() {
  static std::map<std::string, TablePtr> cache;
  return cache;
}

TablePtr bundled(const std::string& name) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& cache = bundled_cache();
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  for (const auto& [n, text] : bundled_group_sources()) {
    if (n == name) {
      TablePtr t = parse_group(parse_json_text(text, "bundled:" + n), n);
      cache.emplace(name, t);
      return t;
    }
  }
  return nullptr;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot open for writing");
  out << text;
}

Complex parse_complex(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw FormatError(path + ": expected [re, im]");
  return {get_double(j[0], at_index(path, 0)), get_double(j[1], at_index(path, 1))};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Matrix parse_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw FormatError(path + ": expected non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw FormatError(at_index(path, 0) + ": expected row array");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = at_index(path, r);
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError(rp + ": ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex(j[r][c], at_index(rp, c));
    }
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

TablePtr parse_group(const Json& doc, const std::string& fallback_name) {
  if (!doc.is_object()) throw FormatError("group document must be a JSON object");
  if (auto it = doc.find("product"); it != doc.end()) {
    if (!it->is_array() || it->size() != 2) throw FormatError("product: expected two group references");
    return product_group(parse_group_ref((*it)[0], "product[0]"), parse_group_ref((*it)[1], "product[1]"));
  }
  const int order = get_int(field(doc, "order", ""), "order");
  if (order < 1) throw FormatError("order: must be positive");
  std::vector<int> mul = parse_mul(field(doc, "mul", ""), order, "mul");
  std::vector<int> inverse = get_int_list(field(doc, "inverse", ""), "inverse");
  const int identity = get_int(field(doc, "identity", ""), "identity");
  std::vector<std::string> labels;
  if (auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array()) throw FormatError("labels: expected array");
    for (std::size_t i = 0; i < it->size(); ++i) labels.push_back(get_string((*it)[i], at_index("labels", i)));
  }
  std::string name = fallback_name;
  if (auto it = doc.find("name"); it != doc.end()) name = get_string(*it, "name");
  FiniteGroup g(order, std::move(mul), std::move(inverse), identity, std::move(labels), std::move(name));

  const Json& irreps_json = array_field(doc, "irreps", "");
  std::vector<Irrep> irreps;
  for (std::size_t a = 0; a < irreps_json.size(); ++a) {
    const std::string p = at_index("irreps", a);
    Irrep ir;
    ir.label = get_string(field(irreps_json[a], "label", p), at_path(p, "label"));
    ir.dim = get_int(field(irreps_json[a], "dim", p), at_path(p, "dim"));
    const Json& mats = array_field(irreps_json[a], "matrices", p);
    for (std::size_t e = 0; e < mats.size(); ++e) {
      ir.matrices.push_back(parse_matrix(mats[e], at_index(at_path(p, "matrices"), e)));
    }
    irreps.push_back(std::move(ir));
  }
  return std::make_shared<const IrrepTable>(std::move(g), std::move(irreps));
}

Json group_to_json(const IrrepTable& t) {
  if (const ProductFactors* pf = t.factors()) {
    Json j;
    j["name"] = t.name();
    j["product"] = Json::array({group_ref(pf->left), group_ref(pf->right)});
    return j;
  }
  const FiniteGroup& g = t.group();
  Json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["identity"] = g.identity();
  if (!g.labels().empty()) j["labels"] = g.labels();
  Json mul = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  j["inverse"] = g.inverse_table();
  Json irreps = Json::array();
  for (const auto& ir : t.irreps()) {
    Json mats = Json::array();
    for (const auto& m : ir.matrices) mats.push_back(matrix_to_json(m));
    irreps.push_back({{"label", ir.label}, {"dim", ir.dim}, {"matrices", std::move(mats)}});
  }
  j["irreps"] = std::move(irreps);
  return j;
}

std::vector<std::string> bundled_group_names() {
  std::vector<std::string> names;
  for (const auto& entry : bundled_group_sources()) names.push_back(entry.first);
  return names;
}

TablePtr resolve_group(const std::string& spec) {
  if (spec.empty()) throw FormatError("empty group specification");
  if (TablePtr t = bundled(spec)) return t;
  namespace fs = std::filesystem;
  if (fs::is_regular_file(spec)) return parse_group(read_json_file(spec), fs::path(spec).stem().string());
  // "s3.json" with no such file still names the bundled s3.
  if (fs::path(spec).extension() == ".json") {
    if (TablePtr t = bundled(fs::path(spec).stem().string())) return t;
  }
  // Products split at the last 'x' whose left part resolves, so "s3xz2xz2" nests left.
  for (std::size_t pos = spec.rfind('x'); pos != std::string::npos && pos > 0; pos = spec.rfind('x', pos - 1)) {
    const std::string left = spec.substr(0, pos), right = spec.substr(pos + 1);
    if (right.empty()) continue;
    try {
      TablePtr r = resolve_group(right);
      TablePtr l = resolve_group(left);
      return product_group(l, r);
    } catch (const FormatError&) {
    }
  }
  throw FormatError("group '" + spec + "' is neither a bundled group, a product of them, nor a readable file");
}

Json domain_to_json(const IrrepTable& t) {
  if (const ProductFactors* pf = t.factors()) {
    return Json::array({domain_to_json(*pf->left), domain_to_json(*pf->right)});
  }
  return t.name();
}

GroupFunction parse_function(const Json& doc, const TablePtr& expected) {
  TablePtr domain = domain_of(doc, expected);
  const Json& values = array_field(doc, "values", "");
  Vector v(domain->order());
  const ProductFactors* pf = domain->factors();
  if (!values.empty() && values[0].is_array() && !values[0].empty() && values[0][0].is_array()) {
    if (!pf) throw ShapeMismatch("values: nested rows are only valid on a product domain");
    const int rows = pf->left->order(), cols = pf->right->order();
    if (static_cast<int>(values.size()) != rows) {
      throw ShapeMismatch("values: expected " + std::to_string(rows) + " rows, found " +
                          std::to_string(values.size()));
    }
    for (int r = 0; r < rows; ++r) {
      const Json& row = values[r];
      const std::string rp = at_index("values", r);
      if (!row.is_array() || static_cast<int>(row.size()) != cols) {
        throw ShapeMismatch(rp + ": expected " + std::to_string(cols) + " entries");
      }
      for (int c = 0; c < cols; ++c) v(pf->element(r, c)) = parse_complex(row[c], at_index(rp, c));
    }
  } else {
    if (static_cast<int>(values.size()) != domain->order()) {
      throw ShapeMismatch("values: expected " + std::to_string(domain->order()) + " entries, found " +
                          std::to_string(values.size()));
    }
    for (int g = 0; g < domain->order(); ++g) v(g) = parse_complex(values[g], at_index("values", g));
  }
  return GroupFunction(std::move(domain), std::move(v));
}

Json function_to_json(const GroupFunction& f) {
  Json j;
  j["domain"] = domain_to_json(*f.domain);
  if (const ProductFactors* pf = f.domain->factors()) {
    Json rows = Json::array();
    for (int r = 0; r < pf->left->order(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < pf->right->order(); ++c) row.push_back(complex_to_json(f.values(pf->element(r, c))));
      rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
  } else {
    j["values"] = vector_to_json(f.values);
  }
  return j;
}

FourierBlocks parse_blocks(const Json& doc, const TablePtr& expected) {
  TablePtr domain = domain_of(doc, expected);
  if (auto it = doc.find("normalization"); it != doc.end()) {
    const std::string norm = get_string(*it, "normalization");
    if (norm != kBlocksNormalization) {
      throw FormatError("normalization: unsupported convention '" + norm + "' (only '" +
                        std::string(kBlocksNormalization) + "' is accepted)");
    }
  }
  const Json& blocks = field(doc, "blocks", "");
  if (!blocks.is_object()) throw FormatError("blocks: expected object keyed by irrep label");
  FourierBlocks out;
  out.domain = domain;
  for (int a = 0; a < domain->size(); ++a) {
    const int d = domain->irrep(a).dim;
    out.blocks.push_back(Matrix::Zero(d, d));
  }
  for (auto it = blocks.begin(); it != blocks.end(); ++it) {
    const int a = domain->find_irrep(it.key());
    Matrix m = parse_matrix(it.value(), "blocks." + it.key());
    const int d = domain->irrep(a).dim;
    if (m.rows() != d || m.cols() != d) {
      throw ShapeMismatch("blocks." + it.key() + ": expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    out.blocks[a] = std::move(m);
  }
  return out;
}

Json blocks_to_json(const FourierBlocks& b) {
  Json j;
  j["domain"] = domain_to_json(*b.domain);
  j["normalization"] = kBlocksNormalization;
  Json blocks = Json::object();
  for (int a = 0; a < b.domain->size(); ++a) blocks[b.domain->irrep(a).label] = matrix_to_json(b.blocks[a]);
  j["blocks"] = std::move(blocks);
  return j;
}

PlacedOperator parse_state(const Json& doc, const TablePtr& domain) {
  PlacedOperator out;
  out.matrix = parse_matrix(field(doc, "matrix", ""), "matrix");
  if (out.matrix.rows() != out.matrix.cols()) throw ShapeMismatch("matrix: must be square");
  if (auto it = doc.find("block"); it != doc.end()) {
    std::string label;
    if (it->is_array()) {
      for (std::size_t i = 0; i < it->size(); ++i) {
        label += (i ? "," : "") + get_string((*it)[i], at_index("block", i));
      }
    } else {
      label = get_string(*it, "block");
    }
    out.irrep = domain->find_irrep(label);
  } else {
    std::vector<int> matches;
    for (int a = 0; a < domain->size(); ++a) {
      if (domain->irrep(a).dim == out.matrix.rows()) matches.push_back(a);
    }
    if (matches.size() != 1) {
      throw DomainMismatch("state: " + std::to_string(matches.size()) + " irreps of '" + domain->name() +
                           "' have dimension " + std::to_string(out.matrix.rows()) + "; name one with \"block\"");
    }
    out.irrep = matches[0];
  }
  const int d = domain->irrep(out.irrep).dim;
  if (out.matrix.rows() != d) {
    throw ShapeMismatch("matrix: block '" + domain->irrep(out.irrep).label + "' needs " + std::to_string(d) + "x" +
                        std::to_string(d));
  }
  return out;
}

Json state_to_json(const Matrix& rho, const IrrepTable& domain, int irrep) {
  Json j;
  j["block"] = domain.irrep(irrep).label;
  j["matrix"] = matrix_to_json(rho);
  return j;
}

MapPtr parse_map(const Json& doc, const TablePtr& default_group) {
  const std::string form = get_string(field(doc, "form", ""), "form");
  const std::string name = name_or_empty(doc);
  auto group_or_default = [&](const char* key) -> TablePtr {
    if (auto it = doc.find(key); it != doc.end()) return parse_group_ref(*it, key);
    if (auto it = doc.find("group"); it != doc.end()) return parse_group_ref(*it, "group");
    if (default_group) return default_group;
    throw FormatError(std::string(key) + ": missing field (no group given)");
  };

  if (form == "inversion") {
    MapPtr m = make_inversion(group_or_default("group"));
    if (name.empty() || name == m->name) return m;
    return std::make_shared<const PDMapSpec>(PDMapSpec{m->source, m->target, m->form, name});
  }
  if (form == "automorphism") {
    return make_automorphism(group_or_default("group"), get_int_list(field(doc, "permutation", ""), "permutation"),
                             name);
  }
  if (form == "anti_automorphism") {
    return make_anti_automorphism(group_or_default("group"),
                                  get_int_list(field(doc, "permutation", ""), "permutation"), name);
  }
  if (form == "convolution") {
    TablePtr g = group_or_default("group");
    return make_convolution(g, parse_measure(field(doc, "measure", ""), *g, "measure"), name);
  }
  if (form == "kraus_sum") {
    TablePtr g = group_or_default("group");
    const Json& terms = array_field(doc, "terms", "");
    std::vector<KrausTerm> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string p = at_index("terms", i);
      out.push_back({get_double(field(terms[i], "weight", p), at_path(p, "weight")),
                     parse_measure(field(terms[i], "measure", p), *g, at_path(p, "measure"))});
    }
    return make_kraus_sum(g, std::move(out), name);
  }
  if (form == "block_family") {
    TablePtr source = group_or_default("source");
    TablePtr target = group_or_default("target");
    std::vector<Matrix> blocks;
    for (int a = 0; a < target->size(); ++a) {
      for (int b = 0; b < source->size(); ++b) {
        const int n = target->irrep(a).dim, m = source->irrep(b).dim;
        blocks.push_back(Matrix::Zero(n * n, m * m));
      }
    }
    const Json& entries = array_field(doc, "blocks", "");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const std::string p = at_index("blocks", i);
      const int a = target->find_irrep(get_string(field(entries[i], "target", p), at_path(p, "target")));
      const int b = source->find_irrep(get_string(field(entries[i], "source", p), at_path(p, "source")));
      Matrix m = parse_matrix(field(entries[i], "matrix", p), at_path(p, "matrix"));
      Matrix& slot = blocks[a * source->size() + b];
      if (m.rows() != slot.rows() || m.cols() != slot.cols()) {
        throw ShapeMismatch(at_path(p, "matrix") + ": expected " + std::to_string(slot.rows()) + "x" +
                            std::to_string(slot.cols()));
      }
      slot = std::move(m);
    }
    return make_block_family(source, target, std::move(blocks), name);
  }
  if (form == "composition") {
    MapPtr outer = parse_map(field(doc, "outer", ""), default_group);
    MapPtr inner = parse_map(field(doc, "inner", ""), default_group);
    return compose(outer, inner, name);
  }
  throw FormatError("form: unknown map form '" + form + "'");
}

Json map_to_json(const PDMapSpec& m) {
  Json j;
  j["form"] = form_name(m.form);
  j["name"] = m.name;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, BlockFamilyForm>) {
          j["source"] = group_ref(m.source);
          j["target"] = group_ref(m.target);
          Json blocks = Json::array();
          for (int a = 0; a < m.target->size(); ++a) {
            for (int b = 0; b < m.source->size(); ++b) {
              const Matrix& blk = f.blocks[a * m.source->size() + b];
              if (blk.norm() == 0.0) continue;
              blocks.push_back({{"target", m.target->irrep(a).label},
                                {"source", m.source->irrep(b).label},
                                {"matrix", matrix_to_json(blk)}});
            }
          }
          j["blocks"] = std::move(blocks);
        } else if constexpr (std::is_same_v<T, CompositionForm>) {
          j["outer"] = map_to_json(*f.outer);
          j["inner"] = map_to_json(*f.inner);
        } else {
          j["group"] = group_ref(m.source);
          if constexpr (std::is_same_v<T, AutomorphismForm> || std::is_same_v<T, AntiAutomorphismForm>) {
            j["permutation"] = f.permutation;
          } else if constexpr (std::is_same_v<T, ConvolutionForm>) {
            j["measure"] = measure_to_json(f.measure);
          } else if constexpr (std::is_same_v<T, KrausSumForm>) {
            Json terms = Json::array();
            for (const auto& t : f.terms) terms.push_back({{"weight", t.weight}, {"measure", measure_to_json(t.measure)}});
            j["terms"] = std::move(terms);
          }
        }
      },
      m.form);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["valid"] = r.empty();
  Json v = Json::array();
  for (const auto& x : r) v.push_back({{"axiom", x.axiom}, {"detail", x.detail}});
  j["violations"] = std::move(v);
  return j;
}

Json to_json(const PDVerdict& v) {
  Json j;
  j["is_pd"] = v.is_pd;
  j["min_eigenvalue"] = v.min_eigenvalue;
  j["tolerance"] = v.tolerance;
  if (v.witness) {
    j["witness"] = {{"block", v.witness->label}, {"index", v.witness->block}, {"vector", vector_to_json(v.witness->vector)}};
  } else {
    j["witness"] = nullptr;
  }
  j["reason"] = to_string(v.reason);
  return j;
}

Json to_json(const GNSData& g) {
  Json j;
  j["dimension"] = g.dimension;
  j["cyclic_vector"] = vector_to_json(g.cyclic_vector);
  Json reps = Json::array();
  for (const auto& m : g.representation) reps.push_back(matrix_to_json(m));
  j["representation"] = std::move(reps);
  return j;
}

Json to_json(const PurityResult& p) {
  Json j;
  j["is_pure"] = p.is_pure;
  j["block"] = p.label;
  j["rank"] = p.rank;
  j["nonzero_blocks"] = p.nonzero_blocks;
  return j;
}

Json to_json(const MapClassification& c) {
  Json j;
  j["is_pd"] = to_string(c.is_pd);
  j["is_cpd"] = c.is_cpd;
  j["proof"] = c.proof;
  j["tolerance"] = c.tolerance;
  j["best_found_minimum"] = c.best_found_minimum;
  Json choi = Json::array();
  for (const auto& e : c.choi) {
    choi.push_back({{"block", e.label}, {"min_eigenvalue", e.min_eigenvalue}, {"hermitian", e.hermitian}});
  }
  j["choi"] = std::move(choi);
  if (c.counterexample) {
    const auto& ce = *c.counterexample;
    j["counterexample"] = {{"block", ce.label},
                           {"state", vector_to_json(ce.state)},
                           {"eigenvalue", ce.eigenvalue},
                           {"hermitian_image", ce.hermitian_image}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json to_json(const PPTResult& r) {
  Json j;
  j["holds"] = r.holds;
  j["tolerance"] = r.tolerance;
  Json v = Json::array(), b = Json::array();
  for (const auto& x : r.violations) v.push_back(block_to_json(x));
  for (const auto& x : r.blocks) b.push_back(block_to_json(x));
  j["violations"] = std::move(v);
  j["blocks"] = std::move(b);
  return j;
}

Json to_json(const SeparabilityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["bound_entangled_candidate"] = r.bound_entangled_candidate;
  j["tolerance"] = r.tolerance;
  Json blocks = Json::array();
  for (const auto& b : r.per_block) blocks.push_back(block_to_json(b));
  j["per_block"] = std::move(blocks);
  Json fired = Json::array();
  for (const auto& f : r.detectors_fired) {
    fired.push_back({{"map", f.map}, {"block", f.block}, {"eigenvalue", f.eigenvalue}});
  }
  j["detectors_fired"] = std::move(fired);
  return j;
}

Json to_json(const DetectionResult& d) {
  Json j;
  j["map"] = d.map;
  j["fired"] = d.fired;
  j["block"] = d.block;
  j["eigenvalue"] = d.eigenvalue;
  j["verdict"] = to_json(d.verdict);
  return j;
}

}  // namespace groupent
