#include "sphemb/families.hpp"

#include <charconv>

#include "family_util.hpp"

namespace sphemb {

int FamilySpec::at(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw UsageError("family spec '" + text + "' lacks parameter " + key);
  return it->second;
}

namespace {

const std::map<std::string, std::vector<std::string>>& family_parameters() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"monoid", {"m"}},
      {"circular", {"m", "n", "r", "s"}},
      {"determinantal", {"m", "n", "r"}},
      {"complexes", {"l", "m", "n", "r", "s"}},
      {"wonderful", {"k", "l"}},
  };
  return table;
}

int parse_int(const std::string& text, const std::string& context) {
  int v = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty())
    throw UsageError("bad integer '" + text + "' in family spec '" + context + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  spec.text = text;
  auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  auto known = family_parameters().find(spec.family);
  if (known == family_parameters().end()) throw UsageError("unknown family '" + spec.family + "'");
  const auto& names = known->second;
  if (colon == std::string::npos) throw UsageError("family spec '" + text + "' has no parameters");

  auto tokens = split(text.substr(colon + 1), ',');
  bool keyed = tokens.front().find('=') != std::string::npos;
  if (tokens.size() != names.size())
    throw UsageError("family " + spec.family + " takes " + std::to_string(names.size()) + " parameters");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto eq = tokens[i].find('=');
    if ((eq != std::string::npos) != keyed) throw UsageError("mixed positional and named parameters in '" + text + "'");
    if (!keyed) {
      spec.params[names[i]] = parse_int(tokens[i], text);
      continue;
    }
    std::string key = tokens[i].substr(0, eq);
    if (std::find(names.begin(), names.end(), key) == names.end())
      throw UsageError("family " + spec.family + " has no parameter '" + key + "'");
    if (spec.params.count(key)) throw UsageError("parameter '" + key + "' given twice");
    spec.params[key] = parse_int(tokens[i].substr(eq + 1), text);
  }
  return spec;
}

std::vector<SemiInvariantSpec> minor_candidates(const std::vector<BlockShape>& blocks) {
  std::vector<SemiInvariantSpec> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& shape = blocks[b];
    std::size_t top = std::min(shape.rows, shape.cols);
    for (std::size_t k = 1; k <= top; ++k) {
      out.push_back({shape.name + "_lead_" + std::to_string(k),
                     minor_function(b, index_range(0, k), index_range(0, k)), std::nullopt});
      out.push_back({shape.name + "_trail_" + std::to_string(k),
                     minor_function(b, index_range(shape.rows - k, shape.rows), index_range(shape.cols - k, shape.cols)),
                     std::nullopt});
    }
  }
  return out;
}

FamilyInstance make_family(const FamilySpec& spec, std::size_t trials, std::uint64_t seed) {
  FamilyInstance inst;
  inst.spec = spec;
  const auto& f = spec.family;
  if (f == "monoid") {
    int m = spec.at("m");
    inst.model = monoid_model(m);
    inst.realization = [m](std::uint64_t s) { return monoid_realization(m, s); };
    inst.expected_dimension = static_cast<std::size_t>(m * m + 1);
  } else if (f == "circular") {
    auto p = circular_parameters(spec.at("m"), spec.at("n"), spec.at("r"), spec.at("s"));
    inst.model = circular_complexes_model(p.m, p.n, p.r, p.s);
    inst.realization = [p](std::uint64_t s) { return circular_complexes_realization(p.m, p.n, p.r, p.s, s); };
    int k = p.r + p.s;
    inst.expected_dimension = static_cast<std::size_t>(k * (p.m + p.n - k));
  } else if (f == "determinantal") {
    int m = spec.at("m"), n = spec.at("n"), r = spec.at("r");
    inst.model = complete_determinantal_model(m, n, r, trials, seed).model;
    inst.realization = [m, n, r](std::uint64_t s) { return determinantal_realization(m, n, r, s); };
    inst.expected_dimension = static_cast<std::size_t>(r * (m + n - r));
  } else if (f == "complexes") {
    int l = spec.at("l"), m = spec.at("m"), n = spec.at("n"), r = spec.at("r"), s = spec.at("s");
    inst.realization = [=](std::uint64_t sd) { return complexes_realization(l, m, n, r, s, sd); };
    complexes_realization(l, m, n, r, s, seed);  // parameter validation
    inst.expected_dimension = static_cast<std::size_t>(r * (l + m - r) + s * (m - r + n - s));
  } else if (f == "wonderful") {
    inst.wonderful = synthetic_wonderful_model(spec.at("k"), spec.at("l"));
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  return inst;
}

WonderfulModel synthetic_wonderful_model(int k, int l) {
  if (k < 0 || l < 0 || k + l < 1) throw UsageError("wonderful model needs k, l >= 0 and k + l >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("varpi_" + std::to_string(i) + "_1");
  for (int i = 1; i <= k; ++i) labels.push_back("varpi_" + std::to_string(i) + "_2");
  for (int j = 1; j <= l; ++j) labels.push_back("varpi_" + std::to_string(k + j));
  auto lattice = make_lattice(labels);

  // Type A Cartan matrix on consecutive coordinates [first, first + size).
  std::vector<SimpleRoot> roots;
  auto add_type_a = [&](std::size_t first, int size, const std::string& suffix, int offset) {
    for (int i = 0; i < size; ++i) {
      IntegerVector root(lattice->rank(), 0);
      root[first + i] = 2;
      if (i > 0) root[first + i - 1] = -1;
      if (i + 1 < size) root[first + i + 1] = -1;
      roots.push_back({"alpha_" + std::to_string(offset + i + 1) + suffix, Character(lattice, root),
                       Covector::dual_basis(lattice, first + i)});
    }
  };
  add_type_a(0, k, "_1", 0);
  add_type_a(static_cast<std::size_t>(k), k, "_2", 0);
  add_type_a(static_cast<std::size_t>(2 * k), l, "", k);

  WonderfulModel w;
  w.name = "wonderful:k=" + std::to_string(k) + ",l=" + std::to_string(l);
  w.lattice = lattice;
  w.simple_roots = SimpleRootSet(lattice, roots);
  for (int i = 0; i < k; ++i)
    w.paired.push_back({color_label("D_" + std::to_string(i + 1)), Covector::dual_basis(lattice, i),
                        Covector::dual_basis(lattice, k + i)});
  for (int j = 0; j < l; ++j)
    w.single.push_back({color_label("D_" + std::to_string(k + j + 1)), Covector::dual_basis(lattice, 2 * k + j)});
  return w;
}

}  // namespace sphemb
