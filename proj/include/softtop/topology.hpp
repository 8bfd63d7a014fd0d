#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softtop/error.hpp"
#include "softtop/soft_set.hpp"

namespace softtop {

// A validated soft topology. Opens are kept sorted by cell encoding and
// duplicate-free, so equality of topologies is list equality.
//
// `carrier` is the absolute set of the space: the whole grid for an ordinary
// topology, or Y for a relative topology on Y. Every open is a subset of the
// carrier and complements are taken inside it.
class SoftTopology {
 public:
  static SoftTopology indiscrete(const GroundPtr& ground);
  static SoftTopology indiscrete(const GroundPtr& ground, CellMask carrier);
  static SoftTopology discrete(const GroundPtr& ground);
  static SoftTopology discrete(const GroundPtr& ground, CellMask carrier);

  // Wraps opens that are already known to satisfy the axioms. `opens` must be
  // sorted and duplicate-free; used by the enumeration and generation kernels.
  static SoftTopology from_canonical(GroundPtr ground, CellMask carrier,
                                     std::vector<CellMask> opens);

  const GroundPtr& ground() const { return ground_; }
  CellMask carrier() const { return carrier_; }
  const std::vector<CellMask>& opens() const { return opens_; }
  std::size_t size() const { return opens_.size(); }

  bool is_whole_ground() const { return carrier_ == ground_->full_mask(); }

  bool contains(CellMask cells) const;
  bool is_open(const SoftSet& set) const;
  bool is_closed(const SoftSet& set) const;

  SoftSet carrier_set() const { return SoftSet(ground_, carrier_); }
  std::vector<SoftSet> open_sets() const;
  // Complements (inside the carrier) of the opens, sorted.
  std::vector<CellMask> closed_cells() const;

  // t1 is coarser than or equal to t2.
  bool is_subfamily_of(const SoftTopology& other) const;

  friend bool operator==(const SoftTopology& a, const SoftTopology& b) {
    return a.carrier_ == b.carrier_ && a.opens_ == b.opens_ && same_ground(a.ground_, b.ground_);
  }
  // Canonical order of topologies: fewer opens first, then lexicographic on
  // the sorted open lists.
  friend std::strong_ordering operator<=>(const SoftTopology& a, const SoftTopology& b);

 private:
  SoftTopology(GroundPtr ground, CellMask carrier, std::vector<CellMask> opens)
      : ground_(std::move(ground)), carrier_(carrier), opens_(std::move(opens)) {}

  GroundPtr ground_;
  CellMask carrier_;
  std::vector<CellMask> opens_;
};

struct AxiomViolation {
  // "i" (null/absolute missing), "ii" (intersection), "iii" (union).
  std::string axiom;
  std::vector<CellMask> witness;
};

class TopologyError : public InputError {
 public:
  TopologyError(const std::string& what, AxiomViolation violation)
      : InputError(what), violation_(std::move(violation)) {}
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

// First violated axiom in check order (i, ii, iii) with the lowest witness,
// or nothing when the family is a topology on `carrier`.
std::optional<AxiomViolation> find_axiom_violation(std::span<const CellMask> family,
                                                   CellMask carrier);

SoftTopology validate_topology(std::span<const SoftSet> family);
SoftTopology validate_topology(const GroundPtr& ground, CellMask carrier,
                               std::span<const SoftSet> family);

enum class GenerateStrategy {
  // Alternate pairwise intersection and union closure until nothing changes.
  fixpoint,
  // All finite intersections first, then all unions of those.
  two_phase,
};

std::vector<CellMask> generate_cells(std::span<const CellMask> collection, CellMask carrier,
                                     GenerateStrategy strategy = GenerateStrategy::fixpoint);

SoftTopology generate(const GroundPtr& ground, std::span<const SoftSet> collection,
                      GenerateStrategy strategy = GenerateStrategy::fixpoint);
SoftTopology generate(const GroundPtr& ground, CellMask carrier,
                      std::span<const SoftSet> collection,
                      GenerateStrategy strategy = GenerateStrategy::fixpoint);

SoftTopology meet(const SoftTopology& a, const SoftTopology& b);

// Generated by the union of both families, checked against the topology
// generated by their pairwise intersections. Throws ConsistencyError if the
// two routes differ.
SoftTopology join(const SoftTopology& a, const SoftTopology& b);
SoftTopology join_by_union(const SoftTopology& a, const SoftTopology& b);
SoftTopology join_by_intersections(const SoftTopology& a, const SoftTopology& b);

SoftTopology meet_all(std::span<const SoftTopology> family);
SoftTopology join_all(std::span<const SoftTopology> family);

// Opens G ∩ Y. Y must be non-null and inside the carrier.
SoftTopology relative_topology(const SoftTopology& t, const SoftSet& y);

CellMask interior_cells(const SoftTopology& t, CellMask y);
CellMask closure_cells(const SoftTopology& t, CellMask y);
SoftSet interior(const SoftTopology& t, const SoftSet& y);
SoftSet closure(const SoftTopology& t, const SoftSet& y);
bool is_dense(const SoftTopology& t, const SoftSet& y);
bool is_dense_cells(const SoftTopology& t, CellMask y);

// The topology generated by t and a non-open Y.
SoftTopology s_extension(const SoftTopology& t, const SoftSet& y);
SoftTopology s_extension_cells(const SoftTopology& t, CellMask y);

// Every open is a union of members of `base`; the null set counts as the
// empty union.
bool is_base(const SoftTopology& t, std::span<const SoftSet> base);

// Every subset of `carrier`, ascending.
std::vector<CellMask> subsets_of(CellMask carrier);

}  // namespace softtop
