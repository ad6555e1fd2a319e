#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "caycov/bigint.hpp"
#include "caycov/cayley.hpp"
#include "caycov/errors.hpp"
#include "caycov/oracle.hpp"
#include "caycov/partition.hpp"

namespace caycov {

// Everything needed to realize coverings of Cay(B, Y) concretely: the ambient
// Z_M^(l+l'), the image of the relation lattice (so B is ambient/relations),
// and the image of the parity sublattice that every admissible subgroup must
// contain.
struct CoveringContext {
  ProductGroup ambient;
  std::vector<ElemCode> relation_image;
  std::vector<ElemCode> parity_image;
};

namespace covering_detail {

inline std::vector<ElemCode> encode_lattice_mod(const ProductGroup& g, const IntLattice& lat) {
  std::vector<ElemCode> gens;
  for (const auto& row : lat.basis) {
    std::vector<long long> coords(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      BigCount v = row[j] % static_cast<long long>(g.orders()[j]);
      if (v < 0) v += static_cast<long long>(g.orders()[j]);
      coords[j] = static_cast<long long>(v);
    }
    gens.push_back(g.encode(coords));
  }
  return gens;
}

}  // namespace covering_detail

// Ambient modulus M must be a multiple of exp(B).
inline CoveringContext make_covering_context(const CayleySpec& spec, std::uint64_t modulus) {
  if (modulus == 0 || modulus % spec.exponent() != 0) {
    throw InternalError("make_covering_context: modulus must be a positive multiple of exp(B)");
  }
  const std::size_t slots = spec.generator_slots();
  ProductGroup ambient(std::vector<std::uint64_t>(slots, modulus));

  RelationData rd = relation_data(spec);
  std::vector<ElemCode> rel = closure(ambient, covering_detail::encode_lattice_mod(ambient, rd.relations));
  std::vector<ElemCode> par = closure(ambient, covering_detail::encode_lattice_mod(ambient, rd.parity_relations));

  BigCount expected = 1;
  for (std::size_t i = 0; i < slots; ++i) expected *= modulus;
  expected = exact_div(expected, spec.group_order(), "make_covering_context");
  if (BigCount(rel.size()) != expected) {
    throw InternalError("make_covering_context: relation image has the wrong index");
  }
  std::vector<char> in_rel(ambient.size(), 0);
  for (ElemCode x : rel) in_rel[x] = 1;
  for (ElemCode x : par) {
    if (!in_rel[x]) throw InternalError("make_covering_context: parity image escapes the relation image");
  }
  return {std::move(ambient), std::move(rel), std::move(par)};
}

// All subgroups D with parity_image <= D <= relation_image, as ambient codes.
inline std::vector<std::vector<ElemCode>> admissible_subgroups(const CoveringContext& ctx,
                                                               const EnumerationBudget& budget) {
  SubgroupView rel_view(ctx.ambient, ctx.relation_image);
  std::vector<ElemCode> par_local;
  par_local.reserve(ctx.parity_image.size());
  for (ElemCode x : ctx.parity_image) par_local.push_back(rel_view.from_parent(x));
  std::sort(par_local.begin(), par_local.end());

  std::vector<std::vector<ElemCode>> out;
  for (const auto& local_sub : subgroups_containing(rel_view, par_local, budget)) {
    std::vector<ElemCode> ambient_codes;
    ambient_codes.reserve(local_sub.size());
    for (ElemCode lc : local_sub) ambient_codes.push_back(rel_view.to_parent(lc));
    std::sort(ambient_codes.begin(), ambient_codes.end());
    out.push_back(std::move(ambient_codes));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

struct CoveringEnumeration {
  CoveringContext context;
  std::vector<std::vector<ElemCode>> subgroups;  // the admissible D matching the constraint
};

inline CoveringEnumeration enumerate_covering_subgroups_with_kernel(const CayleySpec& spec, const GroupType& kernel,
                                                                    const EnumerationBudget& budget = {}) {
  std::uint64_t modulus = spec.exponent() * kernel.exponent();
  CoveringEnumeration result{make_covering_context(spec, modulus), {}};
  for (auto& d : admissible_subgroups(result.context, budget)) {
    if (quotient_group_type_of(result.context.ambient, result.context.relation_image, d) == kernel) {
      result.subgroups.push_back(std::move(d));
    }
  }
  return result;
}

inline CoveringEnumeration enumerate_covering_subgroups_q_fold(const CayleySpec& spec, std::uint64_t folds,
                                                               const EnumerationBudget& budget = {}) {
  if (folds == 0) throw ValidationError("fold count must be positive");
  std::uint64_t modulus = spec.exponent() * folds;  // exp(F) divides the fold count
  CoveringEnumeration result{make_covering_context(spec, modulus), {}};
  for (auto& d : admissible_subgroups(result.context, budget)) {
    if (result.context.relation_image.size() == folds * d.size()) {
      result.subgroups.push_back(std::move(d));
    }
  }
  return result;
}

inline CoveringEnumeration enumerate_covering_subgroups_with_total(const CayleySpec& spec, const GroupType& kernel,
                                                                   const GroupType& total,
                                                                   const EnumerationBudget& budget = {}) {
  std::uint64_t modulus = spec.exponent() * kernel.exponent();
  CoveringEnumeration result{make_covering_context(spec, modulus), {}};
  std::vector<ElemCode> whole(result.context.ambient.size());
  for (ElemCode x = 0; x < result.context.ambient.size(); ++x) whole[x] = x;
  for (auto& d : admissible_subgroups(result.context, budget)) {
    if (quotient_group_type_of(result.context.ambient, result.context.relation_image, d) != kernel) continue;
    if (quotient_group_type_of(result.context.ambient, whole, d) != total) continue;
    result.subgroups.push_back(std::move(d));
  }
  return result;
}

// Two-primary factor of the total-and-kernel count: subgroups K of the
// 2-primary relation image with parity_image <= K, of a prescribed type,
// whose quotient has a prescribed type. Computed inside Z_{2^k2}^(l+l').
inline BigCount two_primary_kernel_factor(const CayleySpec& spec, int k2, const Partition& subgroup_type,
                                          const Partition& quotient_type, const EnumerationBudget& budget = {}) {
  if (k2 == 0) {
    return (subgroup_type.empty() && quotient_type.empty()) ? 1 : 0;
  }
  std::uint64_t modulus = 1;
  for (int i = 0; i < k2; ++i) modulus *= 2;

  const std::size_t slots = spec.generator_slots();
  ProductGroup ambient(std::vector<std::uint64_t>(slots, modulus));
  RelationData rd = relation_data(spec);
  std::vector<ElemCode> rel = closure(ambient, covering_detail::encode_lattice_mod(ambient, rd.relations));
  std::vector<ElemCode> par = closure(ambient, covering_detail::encode_lattice_mod(ambient, rd.parity_relations));

  SubgroupView rel_view(ambient, rel);
  std::vector<ElemCode> par_local;
  for (ElemCode x : par) par_local.push_back(rel_view.from_parent(x));
  std::sort(par_local.begin(), par_local.end());

  BigCount count = 0;
  for (const auto& local_sub : subgroups_containing(rel_view, par_local, budget)) {
    std::vector<ElemCode> k_codes;
    k_codes.reserve(local_sub.size());
    for (ElemCode lc : local_sub) k_codes.push_back(rel_view.to_parent(lc));
    std::sort(k_codes.begin(), k_codes.end());
    if (subgroup_group_type(ambient, k_codes).at(2) != subgroup_type) continue;
    if (quotient_group_type_of(ambient, rel, k_codes).at(2) != quotient_type) continue;
    ++count;
  }
  return count;
}

// A concretely built covering: both graphs plus the projection.
struct CoveringInstance {
  std::size_t fold_count = 0;
  std::vector<std::vector<std::uint32_t>> total_adjacency;
  std::vector<std::vector<std::uint32_t>> base_adjacency;
  std::vector<std::uint32_t> projection;  // total vertex -> base vertex
};

namespace covering_detail {

template <class Q>
std::vector<std::vector<std::uint32_t>> cayley_adjacency(const Q& q, const std::vector<ElemCode>& gen_images) {
  std::vector<std::vector<std::uint32_t>> adj(q.size());
  for (std::uint32_t v = 0; v < q.size(); ++v) {
    for (ElemCode img : gen_images) adj[v].push_back(q.add(v, img));
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

inline std::vector<ElemCode> slot_generator_codes(const CayleySpec& spec, const ProductGroup& ambient) {
  std::vector<ElemCode> out;
  const std::size_t slots = spec.generator_slots();
  for (std::size_t i = 0; i < slots; ++i) {
    std::vector<long long> coords(slots, 0);
    coords[i] = 1;
    ElemCode e = ambient.encode(coords);
    out.push_back(e);
    if (i < spec.pair_count()) out.push_back(ambient.neg(e));
  }
  return out;
}

}  // namespace covering_detail

// Build the covering determined by D and check the covering axioms: simple
// total graph, neighborhoods mapped bijectively, equal fibers, and kernel
// translations acting transitively on each fiber.
inline CoveringInstance build_and_verify_covering(const CayleySpec& spec, const CoveringContext& ctx,
                                                  const std::vector<ElemCode>& d) {
  QuotientView total(ctx.ambient, d);
  QuotientView base(ctx.ambient, ctx.relation_image);

  std::vector<ElemCode> gen_codes = covering_detail::slot_generator_codes(spec, ctx.ambient);

  // simplicity: generator images must be distinct and nonzero in both quotients
  std::vector<ElemCode> total_imgs, base_imgs;
  for (ElemCode g : gen_codes) {
    total_imgs.push_back(total.coset_of(g));
    base_imgs.push_back(base.coset_of(g));
  }
  auto distinct_nonzero = [](std::vector<ElemCode> imgs, ElemCode zero) {
    std::sort(imgs.begin(), imgs.end());
    if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end()) return false;
    return !std::binary_search(imgs.begin(), imgs.end(), zero);
  };
  if (!distinct_nonzero(total_imgs, total.zero())) {
    throw SimplicityViolatedError("covering: total graph has a loop or parallel edge");
  }
  if (!distinct_nonzero(base_imgs, base.zero())) {
    throw SimplicityViolatedError("covering: base graph has a loop or parallel edge");
  }

  CoveringInstance inst;
  inst.total_adjacency = covering_detail::cayley_adjacency(total, total_imgs);
  inst.base_adjacency = covering_detail::cayley_adjacency(base, base_imgs);
  inst.projection.resize(total.size());
  for (std::uint32_t v = 0; v < total.size(); ++v) {
    inst.projection[v] = base.coset_of(total.representative(v));
  }
  inst.fold_count = total.size() / base.size();

  // covering axiom: each neighborhood projects bijectively
  for (std::uint32_t v = 0; v < total.size(); ++v) {
    std::vector<std::uint32_t> projected;
    for (std::uint32_t w : inst.total_adjacency[v]) projected.push_back(inst.projection[w]);
    std::sort(projected.begin(), projected.end());
    if (projected != inst.base_adjacency[inst.projection[v]]) {
      throw InternalError("covering: neighborhood projection is not bijective");
    }
  }

  // fibers: equal size, and translation by the kernel is transitive on each
  std::vector<std::vector<std::uint32_t>> fibers(base.size());
  for (std::uint32_t v = 0; v < total.size(); ++v) fibers[inst.projection[v]].push_back(v);
  std::set<ElemCode> kernel_elems;
  for (ElemCode x : ctx.relation_image) kernel_elems.insert(total.coset_of(x));
  for (const auto& fiber : fibers) {
    if (fiber.size() != inst.fold_count) throw InternalError("covering: unequal fibers");
    std::vector<std::uint32_t> orbit;
    for (ElemCode k : kernel_elems) orbit.push_back(total.add(fiber.front(), k));
    std::sort(orbit.begin(), orbit.end());
    if (orbit != fiber) throw InternalError("covering: kernel translations not transitive on a fiber");
  }
  return inst;
}

}  // namespace caycov
