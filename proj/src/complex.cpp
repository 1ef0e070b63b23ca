#include "simpdeg/complex.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>

#include "simpdeg/error.hpp"

namespace simpdeg {

std::string_view to_string(ClosureMode mode) noexcept {
  return mode == ClosureMode::Closed ? "closed" : "explicit";
}

ClosureMode parse_closure_mode(std::string_view text) {
  if (text == "closed" || text == "closure") return ClosureMode::Closed;
  if (text == "explicit") return ClosureMode::Explicit;
  throw ParamError("unknown closure mode '" + std::string(text) + "' (expected closed|explicit)");
}

namespace {

struct Layer {
  std::vector<Simplex> basis;
  std::unordered_map<Simplex, std::uint32_t, SimplexHash> index;
  std::vector<std::vector<std::uint32_t>> incidence;  // vertex -> basis ids
};

void finish_layer(Layer& layer, std::size_t vertex_bound) {
  std::sort(layer.basis.begin(), layer.basis.end());
  layer.basis.erase(std::unique(layer.basis.begin(), layer.basis.end()), layer.basis.end());
  layer.index.reserve(layer.basis.size());
  layer.incidence.resize(vertex_bound);
  for (std::size_t i = 0; i < layer.basis.size(); ++i) {
    const auto id = static_cast<std::uint32_t>(i);
    layer.index.emplace(layer.basis[i], id);
    for (VertexId v : layer.basis[i]) layer.incidence[v].push_back(id);
  }
}

}  // namespace

struct SimplicialComplex::Impl {
  struct Slot {
    mutable std::once_flag once;
    mutable Layer layer;
  };

  ClosureMode mode = ClosureMode::Closed;
  int dim = -1;
  std::size_t vertex_bound = 0;
  FacetIndex facet_index;
  std::unique_ptr<Slot[]> slots;  // dim + 1 entries

  const Layer& layer(int q) const {
    const Slot& slot = slots[static_cast<std::size_t>(q)];
    std::call_once(slot.once, [&] {
      if (mode != ClosureMode::Closed) return;  // explicit layers are filled at build time
      const std::size_t k = static_cast<std::size_t>(q) + 1;
      for (const Simplex& f : facet_index.facets()) {
        if (f.size() < k) continue;
        for_each_combination(static_cast<int>(f.size()), static_cast<int>(k), [&](std::span<const int> pos) {
          std::vector<VertexId> v;
          v.reserve(k);
          for (int i : pos) v.push_back(f[static_cast<std::size_t>(i)]);
          slot.layer.basis.push_back(Simplex::from_sorted_unchecked(std::move(v)));
        });
      }
      finish_layer(slot.layer, vertex_bound);
    });
    return slot.layer;
  }
};

SimplicialComplex::SimplicialComplex() : impl_(std::make_shared<Impl>()) {}

SimplicialComplex SimplicialComplex::build(std::vector<Simplex> simplices, ClosureMode mode, unsigned threads) {
  auto impl = std::make_shared<Impl>();
  impl->mode = mode;
  for (const auto& s : simplices) {
    if (s.empty()) throw InvalidSimplex("empty simplex in input");
    impl->dim = std::max(impl->dim, s.dim());
    impl->vertex_bound = std::max<std::size_t>(impl->vertex_bound, static_cast<std::size_t>(s.vertices().back()) + 1);
  }
  impl->slots = std::make_unique<Impl::Slot[]>(static_cast<std::size_t>(impl->dim + 1));

  if (mode == ClosureMode::Explicit) {
    for (auto& s : simplices) impl->slots[static_cast<std::size_t>(s.dim())].layer.basis.push_back(s);
    for (int q = 0; q <= impl->dim; ++q) {
      finish_layer(impl->slots[static_cast<std::size_t>(q)].layer, impl->vertex_bound);
      std::call_once(impl->slots[static_cast<std::size_t>(q)].once, [] {});
    }
  }
  // The facets of the closure are the maximal input simplices, so both modes
  // derive them from the input list directly.
  impl->facet_index = FacetIndex(maximal_elements(std::move(simplices), threads));

  SimplicialComplex k;
  k.impl_ = std::move(impl);
  return k;
}

ClosureMode SimplicialComplex::mode() const noexcept { return impl_->mode; }
int SimplicialComplex::dim() const noexcept { return impl_->dim; }
std::size_t SimplicialComplex::vertex_bound() const noexcept { return impl_->vertex_bound; }

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  static const std::vector<Simplex> none;
  if (q < 0 || q > impl_->dim) return none;
  return impl_->layer(q).basis;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int q = 0; q <= impl_->dim; ++q) f.push_back(count(q));
  return f;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.dim() > impl_->dim) return std::nullopt;
  const Layer& layer = impl_->layer(s.dim());
  auto it = layer.index.find(s);
  if (it == layer.index.end()) return std::nullopt;
  return it->second;
}

std::span<const std::uint32_t> SimplicialComplex::incident(int q, VertexId v) const {
  if (q < 0 || q > impl_->dim || v >= impl_->vertex_bound) return {};
  return impl_->layer(q).incidence[v];
}

std::vector<Simplex> SimplicialComplex::cofacets(const Simplex& s, int q_prime) const {
  if (!contains(s)) throw NotInComplex(s.to_string() + " is not stored in the complex");
  if (q_prime < s.dim())
    throw DimensionError("cofacet dimension " + std::to_string(q_prime) + " below simplex dimension " +
                         std::to_string(s.dim()));
  std::vector<Simplex> out;
  if (q_prime > impl_->dim) return out;
  std::span<const std::uint32_t> best;
  bool first = true;
  for (VertexId v : s) {
    auto list = incident(q_prime, v);
    if (first || list.size() < best.size()) best = list;
    first = false;
  }
  const auto& basis = simplices(q_prime);
  for (std::uint32_t id : best)
    if (is_face(s, basis[id])) out.push_back(basis[id]);
  return out;
}

const std::vector<Simplex>& SimplicialComplex::facets() const noexcept { return impl_->facet_index.facets(); }
const FacetIndex& SimplicialComplex::facet_index() const noexcept { return impl_->facet_index; }

}  // namespace simpdeg
