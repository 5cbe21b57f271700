#include "fincat/functor.hpp"

#include <algorithm>
#include <map>

namespace fincat {

FunctorDescription& FunctorDescription::object(std::string from, std::string to, int line) {
    object_map.push_back({std::move(from), std::move(to), line});
    return *this;
}

FunctorDescription& FunctorDescription::morphism(std::string from, std::string to, int line) {
    morphism_map.push_back({std::move(from), std::move(to), line});
    return *this;
}

Functor::Functor(std::string name, CategoryPtr source, CategoryPtr target,
                 std::vector<int> object_map, std::vector<int> morphism_map)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {}

std::string Functor::apply_object(std::string_view id) const {
    int o = source_->object_index(id);
    if (o < 0) throw UnknownId("unknown object '" + std::string(id) + "' in category " + source_->name());
    return target_->object_name(object_map_[o]);
}

std::string Functor::apply_morphism(std::string_view id) const {
    int m = source_->morphism_index(id);
    if (m < 0) throw UnknownId("unknown morphism '" + std::string(id) + "' in category " + source_->name());
    return target_->morphism_name(morphism_map_[m]);
}

bool Functor::operator==(const Functor& other) const {
    if (source_ == other.source_ && target_ == other.target_)
        return object_map_ == other.object_map_ && morphism_map_ == other.morphism_map_;
    if (!structurally_equal(*source_, *other.source_, false) ||
        !structurally_equal(*target_, *other.target_, false))
        return false;
    for (int o = 0; o < source_->num_objects(); ++o) {
        int oo = other.source_->object_index(source_->object_name(o));
        if (target_->object_name(object_map_[o]) !=
            other.target_->object_name(other.object_map_[oo]))
            return false;
    }
    for (int m = 0; m < source_->num_morphisms(); ++m) {
        int om = other.source_->morphism_index(source_->morphism_name(m));
        if (target_->morphism_name(morphism_map_[m]) !=
            other.target_->morphism_name(other.morphism_map_[om]))
            return false;
    }
    return true;
}

Functor validate_functor(const FunctorDescription& raw, CategoryPtr source, CategoryPtr target) {
    std::vector<Violation> violations;
    auto flag = [&](ViolationKind kind, const std::string& message, int line = 0) {
        violations.push_back({kind, message, line});
    };

    const FiniteCategory& src = *source;
    const FiniteCategory& tgt = *target;

    std::vector<int> object_map(src.num_objects(), -1);
    for (const auto& decl : raw.object_map) {
        int from = src.object_index(decl.from);
        if (from < 0) {
            flag(ViolationKind::DanglingReference,
                 "unknown object '" + decl.from + "' in category " + src.name(), decl.line);
            continue;
        }
        int to = tgt.object_index(decl.to);
        if (to < 0) {
            flag(ViolationKind::DanglingReference,
                 "unknown object '" + decl.to + "' in category " + tgt.name(), decl.line);
            continue;
        }
        if (object_map[from] >= 0) {
            flag(ViolationKind::DuplicateId, "object '" + decl.from + "' mapped twice", decl.line);
            continue;
        }
        object_map[from] = to;
    }
    for (int o = 0; o < src.num_objects(); ++o)
        if (object_map[o] < 0)
            flag(ViolationKind::IncompleteMap, "no assignment for object '" + src.object_name(o) + "'");

    std::vector<int> morphism_map(src.num_morphisms(), -1);
    for (const auto& decl : raw.morphism_map) {
        int from = src.morphism_index(decl.from);
        if (from < 0) {
            flag(ViolationKind::DanglingReference,
                 "unknown morphism '" + decl.from + "' in category " + src.name(), decl.line);
            continue;
        }
        int to = tgt.morphism_index(decl.to);
        if (to < 0) {
            flag(ViolationKind::DanglingReference,
                 "unknown morphism '" + decl.to + "' in category " + tgt.name(), decl.line);
            continue;
        }
        if (morphism_map[from] >= 0) {
            flag(ViolationKind::DuplicateId, "morphism '" + decl.from + "' mapped twice", decl.line);
            continue;
        }
        morphism_map[from] = to;
    }
    for (int m = src.num_objects(); m < src.num_morphisms(); ++m)
        if (morphism_map[m] < 0)
            flag(ViolationKind::IncompleteMap,
                 "no assignment for morphism '" + src.morphism_name(m) + "'");

    if (!violations.empty()) throw ValidationError("functor " + raw.name, std::move(violations));

    // Identities not named in the description are mapped automatically.
    for (int o = 0; o < src.num_objects(); ++o)
        if (morphism_map[src.identity_of(o)] < 0)
            morphism_map[src.identity_of(o)] = tgt.identity_of(object_map[o]);

    for (int m = 0; m < src.num_morphisms(); ++m) {
        int fm = morphism_map[m];
        if (tgt.dom(fm) != object_map[src.dom(m)] || tgt.cod(fm) != object_map[src.cod(m)]) {
            flag(ViolationKind::NotFunctorial,
                 "morphism '" + src.morphism_name(m) + "' maps to '" + tgt.morphism_name(fm) +
                     "' whose endpoints do not match the object assignment");
        }
    }
    for (int o = 0; o < src.num_objects(); ++o) {
        int fm = morphism_map[src.identity_of(o)];
        if (fm != tgt.identity_of(object_map[o]))
            flag(ViolationKind::NotFunctorial,
                 "identity of '" + src.object_name(o) + "' maps to non-identity '" +
                     tgt.morphism_name(fm) + "'");
    }
    if (violations.empty()) {
        for (int g = 0; g < src.num_morphisms(); ++g)
            for (int f = 0; f < src.num_morphisms(); ++f) {
                int gf = src.composite_or_none(g, f);
                if (gf < 0) continue;
                int expected = tgt.composite_or_none(morphism_map[g], morphism_map[f]);
                if (expected != morphism_map[gf])
                    flag(ViolationKind::NotFunctorial,
                         "composition not preserved on (" + src.morphism_name(g) + ", " +
                             src.morphism_name(f) + "): image of " + src.morphism_name(gf) +
                             " is " + tgt.morphism_name(morphism_map[gf]) + " but the images compose to " +
                             (expected < 0 ? std::string("nothing") : tgt.morphism_name(expected)));
            }
    }

    if (!violations.empty()) throw ValidationError("functor " + raw.name, std::move(violations));
    return Functor(raw.name, std::move(source), std::move(target), std::move(object_map),
                   std::move(morphism_map));
}

Functor identity_functor(CategoryPtr c) {
    std::vector<int> object_map(c->num_objects());
    std::vector<int> morphism_map(c->num_morphisms());
    for (int o = 0; o < c->num_objects(); ++o) object_map[o] = o;
    for (int m = 0; m < c->num_morphisms(); ++m) morphism_map[m] = m;
    return Functor("id_" + c->name(), c, c, std::move(object_map), std::move(morphism_map));
}

Functor compose_functors(const Functor& g, const Functor& f) {
    const FiniteCategory& mid_f = *f.target();
    const FiniteCategory& mid_g = *g.source();
    bool same_instance = f.target() == g.source();
    if (!same_instance && !structurally_equal(mid_f, mid_g, false))
        throw SourceTargetMismatch("cannot compose " + g.name() + " after " + f.name() +
                                   ": target " + mid_f.name() + " is not source " + mid_g.name());

    std::vector<int> object_map(f.source()->num_objects());
    std::vector<int> morphism_map(f.source()->num_morphisms());
    for (int o = 0; o < f.source()->num_objects(); ++o) {
        int mid = f.apply_object(o);
        if (!same_instance) mid = mid_g.object_index(mid_f.object_name(mid));
        object_map[o] = g.apply_object(mid);
    }
    for (int m = 0; m < f.source()->num_morphisms(); ++m) {
        int mid = f.apply_morphism(m);
        if (!same_instance) mid = mid_g.morphism_index(mid_f.morphism_name(mid));
        morphism_map[m] = g.apply_morphism(mid);
    }
    return Functor(g.name() + "_o_" + f.name(), f.source(), g.target(), std::move(object_map),
                   std::move(morphism_map));
}

bool is_trivial_functor(const Functor& f) {
    const FiniteCategory& src = *f.source();
    for (int m = 0; m < src.num_morphisms(); ++m)
        if (f.apply_object(src.dom(m)) != f.apply_object(src.cod(m))) return false;
    return true;
}

TrivialFactorization trivial_factorization(const Functor& f) {
    if (!is_trivial_functor(f))
        throw NotTrivial("functor " + f.name() + " is not trivial");
    const CategoryPtr& target = f.target();
    CategoryPtr middle = endo_subcategory(*target, target->name() + "_endo");

    // Corestriction: every image morphism is an endomorphism by triviality.
    std::vector<int> object_map(f.source()->num_objects());
    std::vector<int> morphism_map(f.source()->num_morphisms());
    for (int o = 0; o < f.source()->num_objects(); ++o)
        object_map[o] = middle->object_index(target->object_name(f.apply_object(o)));
    for (int m = 0; m < f.source()->num_morphisms(); ++m)
        morphism_map[m] = middle->morphism_index(target->morphism_name(f.apply_morphism(m)));
    Functor corestriction(f.name() + "_cores", f.source(), middle, std::move(object_map),
                          std::move(morphism_map));

    std::vector<int> incl_objects(middle->num_objects());
    std::vector<int> incl_morphisms(middle->num_morphisms());
    for (int o = 0; o < middle->num_objects(); ++o)
        incl_objects[o] = target->object_index(middle->object_name(o));
    for (int m = 0; m < middle->num_morphisms(); ++m)
        incl_morphisms[m] = target->morphism_index(middle->morphism_name(m));
    Functor inclusion(middle->name() + "_incl", middle, target, std::move(incl_objects),
                      std::move(incl_morphisms));

    return {std::move(corestriction), std::move(middle), std::move(inclusion)};
}

}  // namespace fincat
