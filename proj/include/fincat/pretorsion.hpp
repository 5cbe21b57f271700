#ifndef FINCAT_PRETORSION_HPP
#define FINCAT_PRETORSION_HPP

#include <string>
#include <vector>

#include "fincat/functor.hpp"
#include "fincat/presented.hpp"

namespace fincat {

/// Raised when a construction's own postconditions fail; indicates a bug,
/// never bad input.
struct InternalAssertionFailure : Error {
    using Error::Error;
};

/// A wide subcategory together with its inclusion functor.
struct Prekernel {
    CategoryPtr domain;  // X
    Functor inclusion;   // K : X -> A
};

/// The inclusion of a sub-(wide)category, mapping objects and morphisms by
/// identifier; every id of `sub` must exist in `whole`.
Functor inclusion_functor(std::string name, CategoryPtr sub, CategoryPtr whole);

/// Prekernel of a functor: same objects as the source, a hom-set kept exactly
/// when its endpoints have the same image object.
Prekernel prekernel(const Functor& f);

/// Wide subcategory of `base` keeping a hom-set exactly when its endpoints
/// share a partition block. Well defined for every partition.
Prekernel prekernel_from_partition(CategoryPtr base, const ZetaPartition& z, std::string name);

/// The smallest equivalence relation on the target's objects relating F(A1)
/// to F(A2) whenever Hom(A1,A2) is nonempty; objects outside the image are
/// singletons.
ZetaPartition zeta(const Functor& f);

/// The graph with one node per block and one edge per morphism of the
/// functor's target, endpoints pushed through the partition.
QuotientGraph quotient_graph(const FiniteCategory& base, const ZetaPartition& z);

/// The projection of a category onto a presented quotient: objects go to
/// their blocks, morphisms to reduced one-letter words.
class PresentationFunctor {
public:
    PresentationFunctor(std::string name, CategoryPtr source, PresentedCategoryPtr target);

    const std::string& name() const { return name_; }
    const CategoryPtr& source() const { return source_; }
    const PresentedCategoryPtr& target() const { return target_; }

    int node_of(int obj) const { return target_->partition().block_of(obj); }
    PathWord word_of(int morphism) const { return target_->word_of(morphism); }

    /// By-identifier application; throws UnknownId.
    std::string node_of(std::string_view object_id) const;
    PathWord word_of(std::string_view morphism_id) const;

private:
    std::string name_;
    CategoryPtr source_;
    PresentedCategoryPtr target_;
};

struct Precokernel {
    PresentedCategoryPtr quotient;    // G P / ≡
    PresentationFunctor projection;   // pi : A' -> quotient
};

/// Precokernel of a functor as a presented category plus projection.
/// Asserts functoriality of the projection and triviality of pi ∘ F.
Precokernel precokernel(const Functor& f);

/// The maximal symmetric wide subcategory: a hom-set is kept exactly when
/// hom-sets exist in both directions between its endpoints.
struct TorsionPart {
    CategoryPtr torsion;  // A
    Functor inclusion;    // F : A -> A'
};
TorsionPart torsion_part(CategoryPtr aprime);

/// A -> A' -> Q with A the torsion part and Q the precokernel of its
/// inclusion. Construction asserts: A symmetric, Q antisymmetric at node
/// level, zeta equal to the two-way-hom relation, and the prekernel of the
/// projection equal to (A, F) on the nose.
struct ShortPreexactSequence {
    CategoryPtr torsion;     // A
    Functor inclusion;       // F : A -> A'
    CategoryPtr base;        // A'
    Precokernel cokernel;    // pi : A' -> Q
};
ShortPreexactSequence short_preexact(CategoryPtr aprime);

/// The partition of a category's objects by two-way hom connectivity. The
/// generating relation is already transitive, which short_preexact asserts.
ZetaPartition two_way_hom_partition(const FiniteCategory& c);

}  // namespace fincat

#endif
