#include "fincat/pretorsion.hpp"

#include <algorithm>
#include <map>

namespace fincat {

Functor inclusion_functor(std::string name, CategoryPtr sub, CategoryPtr whole) {
    std::vector<int> object_map(sub->num_objects());
    std::vector<int> morphism_map(sub->num_morphisms());
    for (int o = 0; o < sub->num_objects(); ++o) {
        object_map[o] = whole->object_index(sub->object_name(o));
        if (object_map[o] < 0)
            throw UnknownId("object '" + sub->object_name(o) + "' missing from " + whole->name());
    }
    for (int m = 0; m < sub->num_morphisms(); ++m) {
        morphism_map[m] = whole->morphism_index(sub->morphism_name(m));
        if (morphism_map[m] < 0)
            throw UnknownId("morphism '" + sub->morphism_name(m) + "' missing from " + whole->name());
    }
    return Functor(std::move(name), std::move(sub), std::move(whole), std::move(object_map),
                   std::move(morphism_map));
}

Prekernel prekernel_from_partition(CategoryPtr base, const ZetaPartition& z, std::string name) {
    const FiniteCategory& c = *base;
    CategoryDescription desc;
    desc.name = name;
    for (int o = 0; o < c.num_objects(); ++o) desc.object(c.object_name(o));

    std::vector<char> kept(c.num_morphisms(), 0);
    for (int m = 0; m < c.num_morphisms(); ++m) {
        if (!z.same_block(c.dom(m), c.cod(m))) continue;
        kept[m] = 1;
        if (!c.is_identity(m))
            desc.morphism(c.morphism_name(m), c.object_name(c.dom(m)), c.object_name(c.cod(m)));
    }
    // Kept morphisms compose within a block, so the composite is kept too.
    for (int g = c.num_objects(); g < c.num_morphisms(); ++g) {
        if (!kept[g]) continue;
        for (int f = c.num_objects(); f < c.num_morphisms(); ++f) {
            if (!kept[f] || c.cod(f) != c.dom(g)) continue;
            desc.composite(c.morphism_name(g), c.morphism_name(f),
                           c.morphism_name(c.composite_or_none(g, f)));
        }
    }
    CategoryPtr domain = validate_category_ptr(desc);
    Functor inclusion = inclusion_functor("k_" + name, domain, base);
    return {std::move(domain), std::move(inclusion)};
}

Prekernel prekernel(const Functor& f) {
    // Objects are identified when they share an image object.
    const FiniteCategory& src = *f.source();
    std::map<int, int> first_with_image;
    std::vector<std::pair<int, int>> pairs;
    for (int o = 0; o < src.num_objects(); ++o) {
        auto [it, inserted] = first_with_image.try_emplace(f.apply_object(o), o);
        if (!inserted) pairs.emplace_back(it->second, o);
    }
    ZetaPartition fibers(src, pairs);
    return prekernel_from_partition(f.source(), fibers, "preker_" + f.name());
}

ZetaPartition zeta(const Functor& f) {
    const FiniteCategory& src = *f.source();
    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m < src.num_morphisms(); ++m)
        pairs.emplace_back(f.apply_object(src.dom(m)), f.apply_object(src.cod(m)));
    return ZetaPartition(*f.target(), pairs);
}

QuotientGraph quotient_graph(const FiniteCategory& base, const ZetaPartition& z) {
    QuotientGraph graph;
    graph.num_nodes = z.num_blocks();
    for (int m = 0; m < base.num_morphisms(); ++m)
        graph.edges.push_back(
            {m, z.block_of(base.dom(m)), z.block_of(base.cod(m)), base.is_identity(m)});
    return graph;
}

PresentationFunctor::PresentationFunctor(std::string name, CategoryPtr source,
                                         PresentedCategoryPtr target)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {}

std::string PresentationFunctor::node_of(std::string_view object_id) const {
    int o = source_->object_index(object_id);
    if (o < 0)
        throw UnknownId("unknown object '" + std::string(object_id) + "' in category " +
                        source_->name());
    return target_->node_name(node_of(o));
}

PathWord PresentationFunctor::word_of(std::string_view morphism_id) const {
    int m = source_->morphism_index(morphism_id);
    if (m < 0)
        throw UnknownId("unknown morphism '" + std::string(morphism_id) + "' in category " +
                        source_->name());
    return word_of(m);
}

Precokernel precokernel(const Functor& f) {
    auto quotient = std::make_shared<const PresentedCategory>("precoker_" + f.name(), f.target(),
                                                              zeta(f));
    PresentationFunctor projection("pi_" + f.name(), f.target(), quotient);

    // Postconditions of the construction, not input validation.
    const FiniteCategory& base = *f.target();
    for (int o = 0; o < base.num_objects(); ++o)
        if (!projection.word_of(base.identity_of(o)).empty())
            throw InternalAssertionFailure("projection does not collapse identity of " +
                                           base.object_name(o));
    for (int g = 0; g < base.num_morphisms(); ++g)
        for (int fm = 0; fm < base.num_morphisms(); ++fm) {
            int gf = base.composite_or_none(g, fm);
            if (gf < 0) continue;
            PathWord lhs = projection.word_of(gf);
            PathWord rhs = quotient->compose_words(projection.word_of(g), projection.word_of(fm));
            if (lhs != rhs)
                throw InternalAssertionFailure("projection not functorial on (" +
                                               base.morphism_name(g) + ", " + base.morphism_name(fm) +
                                               ")");
        }
    const FiniteCategory& src = *f.source();
    for (int m = 0; m < src.num_morphisms(); ++m)
        if (projection.node_of(f.apply_object(src.dom(m))) !=
            projection.node_of(f.apply_object(src.cod(m))))
            throw InternalAssertionFailure("projection composed with " + f.name() +
                                           " is not trivial");

    return {std::move(quotient), std::move(projection)};
}

namespace {

std::vector<std::pair<int, int>> two_way_pairs(const FiniteCategory& c) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < c.num_objects(); ++a)
        for (int b = a + 1; b < c.num_objects(); ++b)
            if (c.hom_nonempty(a, b) && c.hom_nonempty(b, a)) pairs.emplace_back(a, b);
    return pairs;
}

}  // namespace

ZetaPartition two_way_hom_partition(const FiniteCategory& c) {
    return ZetaPartition(c, two_way_pairs(c));
}

TorsionPart torsion_part(CategoryPtr aprime) {
    Prekernel wide = prekernel_from_partition(aprime, two_way_hom_partition(*aprime),
                                              "tors_" + aprime->name());
    return {std::move(wide.domain), std::move(wide.inclusion)};
}

ShortPreexactSequence short_preexact(CategoryPtr aprime) {
    TorsionPart torsion = torsion_part(aprime);
    Precokernel coker = precokernel(torsion.inclusion);

    if (!is_symmetric(*torsion.torsion))
        throw InternalAssertionFailure("torsion part of " + aprime->name() + " is not symmetric");

    const PresentedCategory& q = *coker.quotient;
    for (int n1 = 0; n1 < q.num_nodes(); ++n1)
        for (int n2 = n1 + 1; n2 < q.num_nodes(); ++n2)
            if (q.hom_inhabited(n1, n2) && q.hom_inhabited(n2, n1))
                throw InternalAssertionFailure("quotient of " + aprime->name() +
                                               " is not antisymmetric at node level");

    // zeta of the inclusion must be the two-way-hom relation itself; the
    // generating relation is transitive, so closure adds nothing.
    ZetaPartition two_way = two_way_hom_partition(*aprime);
    if (!(q.partition() == two_way))
        throw InternalAssertionFailure("zeta of the torsion inclusion differs from the "
                                       "two-way-hom relation on " + aprime->name());

    Prekernel pk = prekernel_from_partition(aprime, q.partition(), "preker_pi_" + aprime->name());
    if (!structurally_equal(*pk.domain, *torsion.torsion, false) ||
        pk.inclusion != torsion.inclusion)
        throw InternalAssertionFailure("prekernel of the projection differs from the torsion part of " +
                                       aprime->name());

    return {std::move(torsion.torsion), std::move(torsion.inclusion), std::move(aprime),
            std::move(coker)};
}

}  // namespace fincat
