#include "fincat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace fincat::verify {

namespace {

void describe_functor(std::ostream& out, const Functor& f) {
    out << f.source()->name() << " -> " << f.target()->name() << " {";
    bool first = true;
    for (int o = 0; o < f.source()->num_objects(); ++o) {
        if (!first) out << ", ";
        first = false;
        out << f.source()->object_name(o) << " |-> "
            << f.target()->object_name(f.apply_object(o));
    }
    for (int m = f.source()->num_objects(); m < f.source()->num_morphisms(); ++m) {
        out << ", " << f.source()->morphism_name(m) << " |-> "
            << f.target()->morphism_name(f.apply_morphism(m));
    }
    out << "}";
}

std::string functor_string(const Functor& f) {
    std::ostringstream out;
    describe_functor(out, f);
    return out.str();
}

}  // namespace

ProbeSuite default_probe_suite() {
    return {fixtures::all(), EnumerationBounds{}};
}

std::vector<Functor> enumerate_functors(CategoryPtr source, CategoryPtr target,
                                        const EnumerationBounds& bounds) {
    const FiniteCategory& src = *source;
    const FiniteCategory& tgt = *target;
    if (src.num_objects() > bounds.max_objects || tgt.num_objects() > bounds.max_objects ||
        src.num_morphisms() > bounds.max_morphisms || tgt.num_morphisms() > bounds.max_morphisms)
        throw BoundExceeded("category size above enumeration bounds (" + src.name() + " -> " +
                            tgt.name() + ")");

    std::vector<Functor> result;
    if (src.num_objects() > 0 && tgt.num_objects() == 0) return result;

    const int n_obj = src.num_objects();
    const int n_mor = src.num_morphisms();
    std::vector<int> object_map(n_obj, 0);

    // Only non-identity morphisms need explicit choices.
    std::vector<int> free_mors;
    for (int m = n_obj; m < n_mor; ++m) free_mors.push_back(m);

    auto emit_for_object_map = [&]() {
        std::vector<std::vector<int>> candidates(free_mors.size());
        long long total = 1;
        for (size_t i = 0; i < free_mors.size(); ++i) {
            int m = free_mors[i];
            candidates[i] = tgt.hom(object_map[src.dom(m)], object_map[src.cod(m)]);
            if (candidates[i].empty()) return;
            total *= static_cast<long long>(candidates[i].size());
            if (total > bounds.max_candidates)
                throw BoundExceeded("more than " + std::to_string(bounds.max_candidates) +
                                    " morphism maps for one object map (" + src.name() + " -> " +
                                    tgt.name() + ")");
        }

        std::vector<int> morphism_map(n_mor);
        for (int o = 0; o < n_obj; ++o) morphism_map[src.identity_of(o)] = tgt.identity_of(object_map[o]);

        std::vector<size_t> pick(free_mors.size(), 0);
        while (true) {
            for (size_t i = 0; i < free_mors.size(); ++i)
                morphism_map[free_mors[i]] = candidates[i][pick[i]];

            bool functorial = true;
            for (int g = n_obj; g < n_mor && functorial; ++g)
                for (int f = n_obj; f < n_mor; ++f) {
                    int gf = src.composite_or_none(g, f);
                    if (gf < 0) continue;
                    if (tgt.composite_or_none(morphism_map[g], morphism_map[f]) != morphism_map[gf]) {
                        functorial = false;
                        break;
                    }
                }
            if (functorial)
                result.emplace_back("f" + std::to_string(result.size()) + "_" + src.name() + "_" +
                                        tgt.name(),
                                    source, target, object_map, morphism_map);

            size_t i = 0;
            while (i < pick.size() && ++pick[i] == candidates[i].size()) pick[i++] = 0;
            if (i == pick.size()) break;
            if (pick.empty()) break;
        }
    };

    if (n_obj == 0) {
        emit_for_object_map();
        return result;
    }
    while (true) {
        emit_for_object_map();
        int o = 0;
        while (o < n_obj && ++object_map[o] == tgt.num_objects()) object_map[o++] = 0;
        if (o == n_obj) break;
    }
    return result;
}

bool is_trivial_bruteforce(const Functor& f, const EnumerationBounds& bounds) {
    CategoryPtr middle = endo_subcategory(*f.target(), f.target()->name() + "_endo");
    std::vector<Functor> gs = enumerate_functors(f.source(), middle, bounds);
    std::vector<Functor> hs = enumerate_functors(middle, f.target(), bounds);
    if (static_cast<long long>(gs.size()) * static_cast<long long>(hs.size()) > bounds.max_pairs)
        throw BoundExceeded("factorization search space too large for " + f.name());
    for (const Functor& g : gs)
        for (const Functor& h : hs)
            if (compose_functors(h, g) == f) return true;
    return false;
}

namespace {

/// Shared body of the two prekernel checks: `composite_trivial` decides
/// triviality of (outer ∘ λ) for λ into the outer functor's source.
VerificationReport prekernel_check_impl(std::string claim,
                                        const std::function<bool(const Functor&)>& composite_trivial,
                                        const CategoryPtr& a, const CategoryPtr& x, const Functor& k,
                                        const ProbeSuite& suite) {
    VerificationReport report{std::move(claim)};

    report.instances_checked += 1;
    if (!composite_trivial(k))
        report.failures.push_back("composite with the inclusion " + k.name() + " is not trivial");

    for (const CategoryPtr& probe : suite.categories) {
        std::vector<Functor> lambdas = enumerate_functors(probe, a, suite.bounds);
        std::vector<Functor> candidates = enumerate_functors(probe, x, suite.bounds);
        for (const Functor& lambda : lambdas) {
            if (!composite_trivial(lambda)) continue;
            report.instances_checked += 1;
            int matches = 0;
            for (const Functor& candidate : candidates)
                if (compose_functors(k, candidate) == lambda) ++matches;
            if (matches != 1)
                report.failures.push_back("probe " + probe->name() + ", functor " +
                                          functor_string(lambda) + ": " + std::to_string(matches) +
                                          " factorizations through " + k.name() +
                                          " instead of exactly one");
        }
    }
    return report;
}

}  // namespace

VerificationReport check_prekernel_universal(const Functor& f, const CategoryPtr& x,
                                             const Functor& k, const ProbeSuite& suite) {
    auto composite_trivial = [&f](const Functor& lambda) {
        return is_trivial_functor(compose_functors(f, lambda));
    };
    return prekernel_check_impl("prekernel universal property of " + f.name(), composite_trivial,
                                f.source(), x, k, suite);
}

VerificationReport check_prekernel_universal(const PresentationFunctor& pi, const CategoryPtr& x,
                                             const Functor& k, const ProbeSuite& suite) {
    // Triviality of pi ∘ λ in the Lemma sense: hom-connected pairs land in
    // one node of the quotient.
    auto composite_trivial = [&pi](const Functor& lambda) {
        const FiniteCategory& src = *lambda.source();
        for (int m = 0; m < src.num_morphisms(); ++m)
            if (pi.node_of(lambda.apply_object(src.dom(m))) !=
                pi.node_of(lambda.apply_object(src.cod(m))))
                return false;
        return true;
    };
    return prekernel_check_impl("prekernel universal property of " + pi.name(), composite_trivial,
                                pi.source(), x, k, suite);
}

VerificationReport check_precokernel_universal(const Functor& f, const Precokernel& coker,
                                               const ProbeSuite& suite) {
    VerificationReport report{"precokernel universal property of " + f.name()};
    const PresentedCategory& q = *coker.quotient;
    const FiniteCategory& aprime = *f.target();
    const ZetaPartition& blocks = q.partition();

    // Valid words up to length 3 and their normal forms, shared by every
    // probe functor below.
    std::vector<PathWord> words;
    for (int n = 0; n < q.num_nodes(); ++n) words.push_back(q.empty_word(n));
    std::vector<std::pair<PathWord, PathWord>> word_pairs;  // (word, reduced)
    {
        std::vector<PathWord> frontier = words;
        for (int len = 1; len <= 3; ++len) {
            std::vector<PathWord> next;
            for (const PathWord& w : frontier)
                for (const auto& edge : q.graph().edges) {
                    if (edge.src_node != q.cod_node(w)) continue;
                    PathWord extended = w;
                    extended.letters.push_back(edge.morphism);
                    next.push_back(extended);
                }
            words.insert(words.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        for (const PathWord& w : words) word_pairs.emplace_back(w, q.reduce(w));
    }

    for (const CategoryPtr& probe : suite.categories) {
        std::vector<Functor> fprimes = enumerate_functors(f.target(), probe, suite.bounds);
        for (const Functor& fprime : fprimes) {
            if (!is_trivial_functor(compose_functors(fprime, f))) continue;
            report.instances_checked += 1;
            const FiniteCategory& b = *probe;

            // (a) the induced assignment is constant on every block, so it
            // is well defined on nodes.
            std::vector<int> node_image(q.num_nodes(), -1);
            bool well_defined = true;
            for (int node = 0; node < q.num_nodes() && well_defined; ++node) {
                for (int obj : blocks.block(node)) {
                    int image = fprime.apply_object(obj);
                    if (node_image[node] < 0) node_image[node] = image;
                    if (node_image[node] != image) {
                        report.failures.push_back(
                            "probe " + b.name() + ", functor " + functor_string(fprime) +
                            ": not constant on block " + q.node_name(node));
                        well_defined = false;
                        break;
                    }
                }
                if (node_image[node] < 0) {
                    report.failures.push_back("empty block " + q.node_name(node));
                    well_defined = false;
                }
            }
            if (!well_defined) continue;

            // (a) continued: the assignment respects every rule instance.
            bool rules_ok = true;
            for (int o = 0; o < aprime.num_objects() && rules_ok; ++o)
                if (fprime.apply_morphism(aprime.identity_of(o)) !=
                    b.identity_of(fprime.apply_object(o))) {
                    report.failures.push_back("probe " + b.name() + ": identity rule broken at " +
                                              aprime.object_name(o));
                    rules_ok = false;
                }
            for (int g = 0; g < aprime.num_morphisms() && rules_ok; ++g)
                for (int m = 0; m < aprime.num_morphisms(); ++m) {
                    int gm = aprime.composite_or_none(g, m);
                    if (gm < 0) continue;
                    if (b.composite_or_none(fprime.apply_morphism(g), fprime.apply_morphism(m)) !=
                        fprime.apply_morphism(gm)) {
                        report.failures.push_back("probe " + b.name() + ": fusion rule broken on (" +
                                                  aprime.morphism_name(m) + ", " +
                                                  aprime.morphism_name(g) + ")");
                        rules_ok = false;
                        break;
                    }
                }
            if (!rules_ok) continue;

            // Evaluate the induced functor H' on a word.
            auto h_eval = [&](const PathWord& w) -> int {
                int acc = b.identity_of(node_image[q.dom_node(w)]);
                for (int letter : w.letters) acc = b.compose(fprime.apply_morphism(letter), acc);
                return acc;
            };

            // (b) H' ∘ pi = F' on objects and morphisms, and H' is constant
            // on congruence classes.
            bool factorizes = true;
            for (int o = 0; o < aprime.num_objects() && factorizes; ++o)
                if (node_image[coker.projection.node_of(o)] != fprime.apply_object(o)) {
                    report.failures.push_back("probe " + b.name() + ": H' disagrees with F' on object " +
                                              aprime.object_name(o));
                    factorizes = false;
                }
            for (int m = 0; m < aprime.num_morphisms() && factorizes; ++m)
                if (h_eval(coker.projection.word_of(m)) != fprime.apply_morphism(m)) {
                    report.failures.push_back("probe " + b.name() +
                                              ": H' disagrees with F' on morphism " +
                                              aprime.morphism_name(m));
                    factorizes = false;
                }
            for (const auto& [word, reduced] : word_pairs) {
                if (!factorizes) break;
                if (h_eval(word) != h_eval(reduced)) {
                    report.failures.push_back("probe " + b.name() +
                                              ": H' not constant on the class of " +
                                              q.word_to_string(word));
                    factorizes = false;
                }
            }
            if (!factorizes) continue;

            // (c) uniqueness is structural: every node is the block of some
            // object and every normal form is the composite of its letters,
            // each forced to F' of that edge by H' ∘ pi = F'.
            for (const auto& [word, reduced] : word_pairs) {
                if (!q.is_normal_form(word)) continue;
                PathWord rebuilt = q.empty_word(q.dom_node(word));
                for (int letter : word.letters)
                    rebuilt = q.compose_words(q.word_of(letter), rebuilt);
                if (rebuilt != word) {
                    report.failures.push_back("normal form " + q.word_to_string(word) +
                                              " is not generated by its letters");
                    break;
                }
            }
        }
    }
    return report;
}

VerificationReport check_galois_prekernel(const Functor& f) {
    VerificationReport report{"galois identity for prekernels of " + f.name()};
    report.instances_checked = 1;

    Prekernel first = prekernel(f);
    ZetaPartition zeta_k = zeta(first.inclusion);
    Prekernel second = prekernel_from_partition(f.source(), zeta_k, "preker2_" + f.name());

    if (!structurally_equal(*second.domain, *first.domain, false))
        report.failures.push_back("preker(precoker(preker " + f.name() +
                                  ")) differs from preker " + f.name() + " as a category");
    else if (second.inclusion != first.inclusion)
        report.failures.push_back("inclusions differ for " + f.name());
    return report;
}

VerificationReport check_galois_precokernel(const Functor& f) {
    VerificationReport report{"galois identity for precokernels of " + f.name()};
    report.instances_checked = 1;

    Precokernel first = precokernel(f);
    Prekernel kprime = prekernel_from_partition(f.target(), first.quotient->partition(),
                                                "preker_pi_" + f.name());
    Precokernel second = precokernel(kprime.inclusion);

    if (!(second.quotient->partition() == first.quotient->partition())) {
        report.failures.push_back("partitions differ for " + f.name());
        return report;
    }
    const auto& e1 = first.quotient->graph().edges;
    const auto& e2 = second.quotient->graph().edges;
    bool same_edges = e1.size() == e2.size();
    for (size_t i = 0; same_edges && i < e1.size(); ++i)
        same_edges = e1[i].morphism == e2[i].morphism && e1[i].src_node == e2[i].src_node &&
                     e1[i].dst_node == e2[i].dst_node && e1[i].identity == e2[i].identity;
    if (!same_edges)
        report.failures.push_back("quotient graphs differ for " + f.name());
    else if (first.quotient->base() != second.quotient->base())
        report.failures.push_back("rewrite rules differ for " + f.name());
    return report;
}

VerificationReport check_condition1(const CategoryPtr& t, const CategoryPtr& fc,
                                    const EnumerationBounds& bounds) {
    if (!is_symmetric(*t))
        throw PreconditionViolated("category " + t->name() + " is not symmetric");
    if (!is_antisymmetric(*fc))
        throw PreconditionViolated("category " + fc->name() + " is not antisymmetric");

    VerificationReport report{"condition (1): Hom(" + t->name() + ", " + fc->name() +
                              ") is all trivial"};
    for (const Functor& f : enumerate_functors(t, fc, bounds)) {
        report.instances_checked += 1;
        if (!is_trivial_functor(f))
            report.failures.push_back("non-trivial functor " + functor_string(f));
    }
    return report;
}

VerificationReport check_short_preexact(const CategoryPtr& aprime, const ProbeSuite& suite) {
    VerificationReport report{"short preexact sequence on " + aprime->name()};
    ShortPreexactSequence seq;
    try {
        seq = short_preexact(aprime);
    } catch (const InternalAssertionFailure& e) {
        report.instances_checked = 1;
        report.failures.push_back(e.what());
        return report;
    }

    report.instances_checked += 1;
    if (!is_symmetric(*seq.torsion))
        report.failures.push_back("torsion part of " + aprime->name() + " is not symmetric");

    const PresentedCategory& q = *seq.cokernel.quotient;
    report.instances_checked += 1;
    for (int n1 = 0; n1 < q.num_nodes(); ++n1)
        for (int n2 = n1 + 1; n2 < q.num_nodes(); ++n2)
            if (q.hom_inhabited(n1, n2) && q.hom_inhabited(n2, n1))
                report.failures.push_back("quotient of " + aprime->name() +
                                          " has two-way homs between " + q.node_name(n1) + " and " +
                                          q.node_name(n2));

    report.instances_checked += 1;
    if (!(q.partition() == two_way_hom_partition(*aprime)))
        report.failures.push_back("zeta differs from the two-way-hom relation on " + aprime->name());

    VerificationReport prekernel_part =
        check_prekernel_universal(seq.cokernel.projection, seq.torsion, seq.inclusion, suite);
    VerificationReport precokernel_part =
        check_precokernel_universal(seq.inclusion, seq.cokernel, suite);
    report.instances_checked += prekernel_part.instances_checked + precokernel_part.instances_checked;
    for (auto* part : {&prekernel_part, &precokernel_part})
        for (std::string& failure : part->failures) report.failures.push_back(std::move(failure));
    return report;
}

}  // namespace fincat::verify
