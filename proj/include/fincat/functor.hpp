#ifndef FINCAT_FUNCTOR_HPP
#define FINCAT_FUNCTOR_HPP

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// Unvalidated functor description. Identity assignments are implicit; only
/// objects and non-identity morphisms need clauses.
struct AssignmentDecl {
    std::string from;
    std::string to;
    int line = 0;
};

struct FunctorDescription {
    std::string name;
    std::string source_name;  // informational; may be empty when built in code
    std::string target_name;
    std::vector<AssignmentDecl> object_map;
    std::vector<AssignmentDecl> morphism_map;

    FunctorDescription& object(std::string from, std::string to, int line = 0);
    FunctorDescription& morphism(std::string from, std::string to, int line = 0);
};

/// A functor between two validated categories. Immutable.
class Functor {
public:
    Functor(std::string name, CategoryPtr source, CategoryPtr target,
            std::vector<int> object_map, std::vector<int> morphism_map);

    const std::string& name() const { return name_; }
    const CategoryPtr& source() const { return source_; }
    const CategoryPtr& target() const { return target_; }

    int apply_object(int obj) const { return object_map_[obj]; }
    int apply_morphism(int mor) const { return morphism_map_[mor]; }

    /// By-identifier application; throws UnknownId.
    std::string apply_object(std::string_view id) const;
    std::string apply_morphism(std::string_view id) const;

    /// Same source/target structure and the same assignments, by identifier.
    bool operator==(const Functor& other) const;
    bool operator!=(const Functor& other) const { return !(*this == other); }

private:
    std::string name_;
    CategoryPtr source_;
    CategoryPtr target_;
    std::vector<int> object_map_;
    std::vector<int> morphism_map_;
};

/// Checks functoriality of the described assignment and returns the functor;
/// throws ValidationError listing all violations otherwise.
Functor validate_functor(const FunctorDescription& raw, CategoryPtr source, CategoryPtr target);

Functor identity_functor(CategoryPtr c);

/// G∘F (F first); throws SourceTargetMismatch unless target(F) = source(G)
/// structurally. Works across distinct instances of equal categories.
Functor compose_functors(const Functor& g, const Functor& f);

/// Lemma-style triviality test: F(A) = F(A') whenever Hom(A,A') is nonempty.
bool is_trivial_functor(const Functor& f);

/// F = H∘G through the wide endo-subcategory of the target.
struct TrivialFactorization {
    Functor corestriction;   // G : source -> middle
    CategoryPtr middle;      // a monoid class
    Functor inclusion;       // H : middle -> target
};

/// Throws NotTrivial when is_trivial_functor(f) fails.
TrivialFactorization trivial_factorization(const Functor& f);

}  // namespace fincat

#endif
