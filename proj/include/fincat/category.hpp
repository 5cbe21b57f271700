#ifndef FINCAT_CATEGORY_HPP
#define FINCAT_CATEGORY_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/errors.hpp"

namespace fincat {

/// Unvalidated category description, as written in a .cat document or built
/// programmatically. Identities are implicit: validate_category creates one
/// `id_<object>` morphism per object and fills in all identity composites.
struct ObjectDecl {
    std::string id;
    int line = 0;
};

struct MorphismDecl {
    std::string id;
    std::string dom;
    std::string cod;
    int line = 0;
};

/// `compose g . f = h`, meaning h = g∘f (f first).
struct CompositeDecl {
    std::string g;
    std::string f;
    std::string h;
    int line = 0;
};

struct CategoryDescription {
    std::string name;
    std::vector<ObjectDecl> objects;
    std::vector<MorphismDecl> morphisms;
    std::vector<CompositeDecl> composites;

    CategoryDescription& object(std::string id, int line = 0);
    CategoryDescription& morphism(std::string id, std::string dom, std::string cod, int line = 0);
    CategoryDescription& composite(std::string g, std::string f, std::string h, int line = 0);
};

/// A finite category with a total composition table on composable pairs.
///
/// Immutable after validation. Objects are indexed 0..num_objects()-1 in
/// declaration order; morphism index i < num_objects() is the identity of
/// object i, non-identity morphisms follow in declaration order.
class FiniteCategory {
public:
    const std::string& name() const { return name_; }

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(morphism_names_.size()); }

    const std::string& object_name(int obj) const { return objects_[obj]; }
    const std::string& morphism_name(int mor) const { return morphism_names_[mor]; }
    const std::vector<std::string>& object_names() const { return objects_; }

    /// -1 when the id is not declared.
    int object_index(std::string_view id) const;
    int morphism_index(std::string_view id) const;

    int dom(int mor) const { return dom_[mor]; }
    int cod(int mor) const { return cod_[mor]; }

    bool is_identity(int mor) const { return mor < num_objects(); }
    int identity_of(int obj) const { return obj; }

    /// g∘f; throws NotComposable when cod(f) != dom(g).
    int compose(int g, int f) const;

    /// Composite index, or -1 when the pair is not composable.
    int composite_or_none(int g, int f) const;

    /// Morphism indices with the given endpoints.
    std::vector<int> hom(int dom_obj, int cod_obj) const;
    bool hom_nonempty(int dom_obj, int cod_obj) const;

    /// Spec-level hom_set by identifier; throws UnknownId.
    std::vector<std::string> hom_set(std::string_view dom_obj, std::string_view cod_obj) const;

private:
    friend FiniteCategory validate_category(const CategoryDescription&);

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<std::string> morphism_names_;
    std::vector<int> dom_;
    std::vector<int> cod_;
    std::vector<int> comp_;  // comp_[g * num_morphisms + f] = g∘f or -1
    // name -> index, kept sorted for lookup
    std::vector<std::pair<std::string, int>> object_lookup_;
    std::vector<std::pair<std::string, int>> morphism_lookup_;
};

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// Checks every category axiom on the description and returns the validated
/// category; throws ValidationError listing all violations otherwise.
FiniteCategory validate_category(const CategoryDescription& raw);
CategoryPtr validate_category_ptr(const CategoryDescription& raw);

/// Hom(T,T') nonempty implies Hom(T',T) nonempty.
bool is_symmetric(const FiniteCategory& c);

/// Homs both ways only between equal objects.
bool is_antisymmetric(const FiniteCategory& c);

/// No morphisms between distinct objects (a disjoint union of monoids).
bool is_monoid_class(const FiniteCategory& c);

/// Wide subcategory keeping exactly the endomorphisms. Always a monoid class.
CategoryPtr endo_subcategory(const FiniteCategory& c, const std::string& name);

/// Same objects, morphisms, endpoints and composites, compared by identifier.
/// Declaration order never matters; the category name only when include_name.
bool structurally_equal(const FiniteCategory& a, const FiniteCategory& b,
                        bool include_name = true);

}  // namespace fincat

#endif
