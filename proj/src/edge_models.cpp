#include "c2lat/edge_models.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "c2lat/group_iso.hpp"

namespace c2lat {

std::string edge_type_name(EdgeType t) {
  switch (t) {
    case EdgeType::C4: return "C4";
    case EdgeType::C2xC2: return "C2xC2";
    case EdgeType::C6: return "C6";
    case EdgeType::S3: return "S3";
  }
  return "?";
}

EdgeType classify_edge_group(const PermGroup& e) {
  const GroupTable t(e);
  bool cyclic = false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.order_of(i) == t.size()) cyclic = true;
  if (t.size() == 4) return cyclic ? EdgeType::C4 : EdgeType::C2xC2;
  if (t.size() == 6) return cyclic ? EdgeType::C6 : EdgeType::S3;
  throw std::invalid_argument("classify_edge_group: order " + std::to_string(t.size()));
}

namespace {

std::vector<std::size_t> compose_maps(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  std::vector<std::size_t> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

}  // namespace

EdgeModel::EdgeModel(EdgeType t) : type_(t), pres_(model_presentation(edge_type_name(t))) {
  table_ = std::make_shared<const GroupTable>(regular_representation(pres_));
  const GroupTable& tab = *table_;
  const std::size_t n = tab.size();

  std::vector<std::vector<std::size_t>> maps;
  HomSearch s;
  s.src = &tab;
  s.dst = &tab;
  s.bijective = true;
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  s.candidates.assign(tab.num_generators(), all);
  for_each_homomorphism(s, [&](const std::vector<std::size_t>&, const std::vector<std::size_t>& map) {
    maps.push_back(map);
    return true;
  });
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::sort(maps.begin(), maps.end());
  auto it = std::find(maps.begin(), maps.end(), id);
  if (it == maps.end()) throw std::logic_error("EdgeModel: identity missing");
  std::rotate(maps.begin(), it, it + 1);

  std::vector<std::size_t> involutions;
  for (std::size_t x = 1; x < n; ++x)
    if (tab.order_of(x) == 2) involutions.push_back(x);

  for (const auto& m : maps) {
    EdgeAut a;
    a.map = m;
    if (m == id) {
      a.label = "id";
    } else if (t == EdgeType::C4 || t == EdgeType::C6) {
      a.label = "rho";
    } else if (t == EdgeType::C2xC2) {
      // Cycle notation on the three involutions.
      std::ostringstream os;
      std::vector<bool> seen(involutions.size(), false);
      for (std::size_t k = 0; k < involutions.size(); ++k) {
        if (seen[k] || m[involutions[k]] == involutions[k]) continue;
        os << "(";
        std::size_t j = k;
        bool first = true;
        while (!seen[j]) {
          seen[j] = true;
          os << (first ? "" : ",") << element_name(involutions[j]);
          first = false;
          j = static_cast<std::size_t>(
              std::find(involutions.begin(), involutions.end(), m[involutions[j]]) - involutions.begin());
        }
        os << ")";
      }
      a.label = os.str();
    } else {
      for (std::size_t g = 1; g < n && a.label.empty(); ++g) {
        bool inner = true;
        for (std::size_t x = 0; x < n && inner; ++x)
          inner = m[x] == tab.mul(tab.mul(g, x), tab.inv(g));
        if (inner) a.label = "Ad(" + element_name(g) + ")";
      }
      if (a.label.empty()) throw std::logic_error("EdgeModel: S3 automorphism is not inner");
    }
    auts_.push_back(std::move(a));
  }

  const std::size_t k = auts_.size();
  compose_.resize(k * k);
  inverse_.resize(k);
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t g = 0; g < k; ++g) {
      auto c = find_map(compose_maps(auts_[f].map, auts_[g].map));
      compose_[f * k + g] = c;
      if (c == 0) inverse_[f] = g;
    }
  for (std::size_t f = 1; f < k; ++f) {
    if (aut_closure(*this, gens_).size() == k) break;
    auto cl = aut_closure(*this, gens_);
    if (!std::binary_search(cl.begin(), cl.end(), f)) gens_.push_back(f);
  }
}

std::string EdgeModel::element_name(std::size_t x) const {
  if (x == 0) return "1";
  std::string out;
  for (auto g : table_->word(x)) out += pres_.generators[g].name;
  return out;
}

std::size_t EdgeModel::find(const std::string& label) const {
  for (std::size_t i = 0; i < auts_.size(); ++i)
    if (auts_[i].label == label) return i;
  throw std::invalid_argument("EdgeModel " + edge_type_name(type_) + ": unknown automorphism " + label);
}

std::size_t EdgeModel::find_map(const std::vector<std::size_t>& map) const {
  for (std::size_t i = 0; i < auts_.size(); ++i)
    if (auts_[i].map == map) return i;
  return static_cast<std::size_t>(-1);
}

const EdgeModel& edge_model(EdgeType t) {
  static std::array<std::once_flag, 4> once;
  static std::array<std::unique_ptr<EdgeModel>, 4> store;
  const auto k = static_cast<std::size_t>(t);
  std::call_once(once[k], [&] { store[k] = std::make_unique<EdgeModel>(t); });
  return *store[k];
}

std::vector<std::size_t> aut_closure(const EdgeModel& m, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(m.num_auts(), false);
  std::vector<std::size_t> out{0}, queue{0};
  in[0] = true;
  while (!queue.empty()) {
    auto x = queue.back();
    queue.pop_back();
    for (auto g : gens) {
      auto y = m.compose(x, g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_double_cosets(const EdgeModel& m, const std::vector<std::size_t>& h,
                                const std::vector<std::size_t>& k) {
  std::vector<bool> seen(m.num_auts(), false);
  std::size_t count = 0;
  for (std::size_t g = 0; g < m.num_auts(); ++g) {
    if (seen[g]) continue;
    ++count;
    for (auto x : h)
      for (auto y : k) seen[m.compose(m.compose(x, g), m.inverse(y))] = true;
  }
  return count;
}

}  // namespace c2lat
