#pragma once

// Covering ideals (sieves of Boolean frames), their pullback overlaps and
// pasting maps, and the counit L(S) -> L.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlogic/colimit.hpp"

namespace qlogic {

// A frame of R(L): object index in the base and index into R(L).homs.
struct CoverRef {
  int object = 0;
  int frame = 0;

  friend auto operator<=>(const CoverRef&, const CoverRef&) = default;
};

class CoveringIdeal {
 public:
  // Sieve closure of the generators: every psi ∘ M(v) is added.
  CoveringIdeal(std::shared_ptr<const FramesFunctor> frames, std::vector<CoverRef> generators);

  static CoveringIdeal empty(std::shared_ptr<const FramesFunctor> frames);
  static CoveringIdeal all(std::shared_ptr<const FramesFunctor> frames);

  const FramesFunctor& frames() const { return *frames_; }
  const std::shared_ptr<const FramesFunctor>& frames_ptr() const { return frames_; }
  const QuantumEventAlgebra& algebra() const { return frames_->algebra; }
  const std::vector<CoverRef>& generators() const { return generators_; }

  // Sorted frame indices per base object.
  const std::vector<int>& at(int object) const { return members_[object]; }
  bool contains(CoverRef c) const;
  std::vector<CoverRef> covers() const;
  const QuantumHom& hom(CoverRef c) const { return frames_->homs[c.object][c.frame]; }
  std::string cover_name(CoverRef c) const;

  bool is_sieve_closed() const;
  bool includes(const CoveringIdeal& other) const;

  // The ideal as a subpresheaf of R(L), with the frame per element.
  Presheaf presheaf() const;
  std::vector<std::vector<QuantumHom>> frame_lists() const;

  friend bool operator==(const CoveringIdeal& a, const CoveringIdeal& b) { return a.members_ == b.members_; }

 private:
  CoveringIdeal(std::shared_ptr<const FramesFunctor> frames, std::vector<CoverRef> generators,
                std::vector<std::vector<int>> members);

  std::shared_ptr<const FramesFunctor> frames_;
  std::vector<CoverRef> generators_;
  std::vector<std::vector<int>> members_;
};

// R(L) over the full subcategory 2^1 .. 2^k, k the largest block's atom count.
std::shared_ptr<const FramesFunctor> block_frames(const QuantumEventAlgebra& l, const HomSearchLimits& limits = {});

// The cover M(2^k) -> L of a block, atoms sent to the block atoms in
// ascending order.
CoverRef block_cover(const FramesFunctor& frames, const std::vector<Element>& block);

// Generated by the block covers of the chosen blocks (all blocks when empty).
CoveringIdeal block_ideal(std::shared_ptr<const FramesFunctor> frames, std::vector<std::vector<Element>> blocks = {});

struct Overlap {
  CoverRef first;
  CoverRef second;
  std::vector<std::pair<Element, Element>> carrier;  // (x, y) with psi(x) = psi'(y), sorted
  QuantumEventAlgebra algebra;                        // element i is carrier[i]
  QuantumHom to_first;                                // psi_{B,B'}
  QuantumHom to_second;                               // psi_{B',B}
  bool valid = false;                                 // passes the axiom suite
  bool commutes = false;
  bool trivial = false;  // image in L is {0, 1}

  std::vector<Element> image_in_l(const CoveringIdeal& ideal) const;
};

Overlap pullback_overlap(const CoveringIdeal& ideal, CoverRef first, CoverRef second);

// Omega_{B,B'} = psi_{B,B'} ∘ psi_{B',B}^{-1}: a partial map M(B') -> M(B),
// -1 where undefined. Requires injective covers.
std::vector<Element> pasting_map(const Overlap& overlap, std::size_t second_size);

struct CocycleFailure {
  std::string identity;  // "unit", "composition" or "inverse"
  std::vector<CoverRef> covers;
  Element witness = -1;
};

struct CocycleReport {
  std::size_t covers_checked = 0;
  std::size_t skipped_noninjective = 0;
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::vector<CocycleFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Runs the three cocycle identities over the injective covers of the ideal.
// Throws NonInjectiveCover when a generator is not injective; covers that
// only enter through sieve closure and are not injective are skipped.
CocycleReport check_cocycles(const CoveringIdeal& ideal);

// Joint surjectivity of the covers onto L.
bool is_epimorphic_family(const CoveringIdeal& ideal);

struct CounitReport {
  QuotientAlgebra quotient;
  QuantumHom counit;
  bool preserves_structure = false;
  bool injective = false;
  bool surjective = false;
  std::vector<Element> missed;                    // elements of L outside the image
  std::optional<std::pair<int, int>> collision;  // two classes with one image

  bool isomorphism() const { return preserves_structure && injective && surjective; }
};

// epsilon_L : L(S) -> L, [psi, q] |-> psi(q). Throws IllDefined when two
// equivalent pointed frames disagree in L.
CounitReport counit_eval(const CoveringIdeal& ideal);

}  // namespace qlogic
