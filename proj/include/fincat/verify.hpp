#ifndef FINCAT_VERIFY_HPP
#define FINCAT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fincat/pretorsion.hpp"

namespace fincat::verify {

struct EnumerationBounds {
    int max_objects = 4;
    int max_morphisms = 12;
    long long max_candidates = 20000;   // morphism maps tried per object map
    long long max_pairs = 2000000;      // (G,H) pairs in the factorization search
};

/// Outcome of one law checked by brute force. Failures describe concrete
/// counterexamples; empty failures means the law held on every instance.
struct VerificationReport {
    std::string claim;
    long long instances_checked = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

/// The probe categories quantified over in the universal-property checks.
struct ProbeSuite {
    std::vector<CategoryPtr> categories;
    EnumerationBounds bounds;
};

/// The six standard fixtures.
ProbeSuite default_probe_suite();

/// The complete duplicate-free list of functors source -> target, in a
/// deterministic order. Throws BoundExceeded above the configured caps.
std::vector<Functor> enumerate_functors(CategoryPtr source, CategoryPtr target,
                                        const EnumerationBounds& bounds = {});

/// Definition-level triviality: searches for a factorization H∘G = F through
/// the wide endo-subcategory of the target. Independent of the
/// is_trivial_functor characterization.
bool is_trivial_bruteforce(const Functor& f, const EnumerationBounds& bounds = {});

/// Checks that (x, k) is a prekernel of f: f∘k trivial, and every probe
/// functor λ with f∘λ trivial factors uniquely through k.
VerificationReport check_prekernel_universal(const Functor& f, const CategoryPtr& x,
                                             const Functor& k, const ProbeSuite& suite);

/// Same universal property when the second functor is a projection onto a
/// presented quotient (triviality read at node level).
VerificationReport check_prekernel_universal(const PresentationFunctor& pi, const CategoryPtr& x,
                                             const Functor& k, const ProbeSuite& suite);

/// Checks that the precokernel projection has the couniversal property: every
/// probe functor F' with F'∘f trivial is constant on blocks, compatible with
/// the rewrite rules, and factors uniquely through the projection.
VerificationReport check_precokernel_universal(const Functor& f, const Precokernel& coker,
                                               const ProbeSuite& suite);

/// preker(precoker(preker f)) equals preker f on the nose.
VerificationReport check_galois_prekernel(const Functor& f);

/// precoker(preker(precoker f)) equals precoker f: same partition, same
/// quotient graph, same rules.
VerificationReport check_galois_precokernel(const Functor& f);

/// Every functor from a symmetric category to an antisymmetric one is
/// trivial. Throws PreconditionViolated when the arguments are not.
VerificationReport check_condition1(const CategoryPtr& t, const CategoryPtr& fc,
                                    const EnumerationBounds& bounds = {});

/// Runs short_preexact and verifies both universal properties plus the
/// symmetry/antisymmetry/zeta postconditions.
VerificationReport check_short_preexact(const CategoryPtr& aprime, const ProbeSuite& suite);

struct GenParams {
    int max_objects = 4;
    int max_morphisms = 12;
};

/// Deterministic random category: thin preorders, preset monoids, binary
/// products and disjoint unions of those. Always valid by construction.
CategoryPtr gen_category(std::uint64_t seed, const GenParams& params = {});

/// Uniform deterministic choice among all functors source -> target.
/// Throws NoFunctorExists when there are none.
Functor gen_functor(std::uint64_t seed, CategoryPtr source, CategoryPtr target,
                    const EnumerationBounds& bounds = {});

/// Binary product; objects and morphisms are named componentwise.
CategoryPtr product_category(const std::string& name, const FiniteCategory& a,
                             const FiniteCategory& b);

/// Disjoint union; left/right parts keep their names under l_/r_ prefixes.
CategoryPtr disjoint_union_category(const std::string& name, const FiniteCategory& a,
                                    const FiniteCategory& b);

struct LawSuiteConfig {
    bool seeded = false;
    std::uint64_t seed = 0;
    int num_generated = 8;  // generated categories added in seeded mode
    EnumerationBounds bounds;
    bool verbose = false;
};

/// The full law suite in a fixed order; one report per law.
std::vector<VerificationReport> run_law_suite(const LawSuiteConfig& config);

}  // namespace fincat::verify

namespace fincat::fixtures {

/// One object, identity only.
CategoryPtr terminal();
/// Two objects a, b and one arrow u : a -> b.
CategoryPtr walking_arrow();
/// Two objects with mutually inverse u : a -> b, v : b -> a.
CategoryPtr walking_iso();
/// One object with an involution s, s∘s = id.
CategoryPtr involution();
/// Two objects, identities only.
CategoryPtr discrete_pair();
/// Three objects with f : b -> a and g : b -> c.
CategoryPtr span();

/// All six, in the order above.
std::vector<CategoryPtr> all();

}  // namespace fincat::fixtures

#endif
