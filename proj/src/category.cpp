#include "fincat/category.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fincat {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::DuplicateId: return "DuplicateId";
        case ViolationKind::DanglingReference: return "DanglingReference";
        case ViolationKind::MissingComposite: return "MissingComposite";
        case ViolationKind::TypeMismatch: return "TypeMismatch";
        case ViolationKind::IdentityLawViolation: return "IdentityLawViolation";
        case ViolationKind::AssociativityViolation: return "AssociativityViolation";
        case ViolationKind::NotFunctorial: return "NotFunctorial";
        case ViolationKind::IncompleteMap: return "IncompleteMap";
        case ViolationKind::UnknownCategory: return "UnknownCategory";
    }
    return "Unknown";
}

namespace {

std::string summarize(const std::string& subject, const std::vector<Violation>& violations) {
    std::ostringstream out;
    out << subject << ": " << violations.size()
        << (violations.size() == 1 ? " violation" : " violations");
    for (const auto& v : violations) {
        out << "\n  [" << to_string(v.kind) << "] " << v.message;
        if (v.line > 0) out << " (line " << v.line << ")";
    }
    return out.str();
}

int lookup(const std::vector<std::pair<std::string, int>>& table, std::string_view id) {
    auto it = std::lower_bound(table.begin(), table.end(), id,
                               [](const auto& entry, std::string_view key) { return entry.first < key; });
    if (it == table.end() || it->first != id) return -1;
    return it->second;
}

}  // namespace

ValidationError::ValidationError(std::string subject, std::vector<Violation> violations)
    : Error(summarize(subject, violations)),
      subject_(std::move(subject)),
      violations_(std::move(violations)) {}

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": expected " + expected + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

CategoryDescription& CategoryDescription::object(std::string id, int line) {
    objects.push_back({std::move(id), line});
    return *this;
}

CategoryDescription& CategoryDescription::morphism(std::string id, std::string dom,
                                                   std::string cod, int line) {
    morphisms.push_back({std::move(id), std::move(dom), std::move(cod), line});
    return *this;
}

CategoryDescription& CategoryDescription::composite(std::string g, std::string f,
                                                    std::string h, int line) {
    composites.push_back({std::move(g), std::move(f), std::move(h), line});
    return *this;
}

int FiniteCategory::object_index(std::string_view id) const {
    return lookup(object_lookup_, id);
}

int FiniteCategory::morphism_index(std::string_view id) const {
    return lookup(morphism_lookup_, id);
}

int FiniteCategory::compose(int g, int f) const {
    int h = comp_[g * num_morphisms() + f];
    if (h < 0)
        throw NotComposable("cannot compose " + morphism_names_[g] + " after " +
                            morphism_names_[f] + " in category " + name_);
    return h;
}

int FiniteCategory::composite_or_none(int g, int f) const {
    return comp_[g * num_morphisms() + f];
}

std::vector<int> FiniteCategory::hom(int dom_obj, int cod_obj) const {
    std::vector<int> result;
    for (int m = 0; m < num_morphisms(); ++m)
        if (dom_[m] == dom_obj && cod_[m] == cod_obj) result.push_back(m);
    return result;
}

bool FiniteCategory::hom_nonempty(int dom_obj, int cod_obj) const {
    for (int m = 0; m < num_morphisms(); ++m)
        if (dom_[m] == dom_obj && cod_[m] == cod_obj) return true;
    return false;
}

std::vector<std::string> FiniteCategory::hom_set(std::string_view dom_obj,
                                                 std::string_view cod_obj) const {
    int a = object_index(dom_obj);
    if (a < 0) throw UnknownId("unknown object '" + std::string(dom_obj) + "' in category " + name_);
    int b = object_index(cod_obj);
    if (b < 0) throw UnknownId("unknown object '" + std::string(cod_obj) + "' in category " + name_);
    std::vector<std::string> result;
    for (int m : hom(a, b)) result.push_back(morphism_names_[m]);
    std::sort(result.begin(), result.end());
    return result;
}

FiniteCategory validate_category(const CategoryDescription& raw) {
    std::vector<Violation> violations;
    auto flag = [&](ViolationKind kind, const std::string& message, int line = 0) {
        violations.push_back({kind, message, line});
    };

    // Objects first; duplicates are dropped so later checks see each id once.
    std::vector<std::string> objects;
    std::map<std::string, int> object_index;
    for (const auto& decl : raw.objects) {
        if (object_index.count(decl.id)) {
            flag(ViolationKind::DuplicateId, "object '" + decl.id + "' declared twice", decl.line);
            continue;
        }
        object_index[decl.id] = static_cast<int>(objects.size());
        objects.push_back(decl.id);
    }
    const int num_objects = static_cast<int>(objects.size());

    // Identities occupy indices 0..num_objects-1.
    std::vector<std::string> morphism_names;
    std::vector<int> dom, cod;
    std::map<std::string, int> morphism_index;
    for (int o = 0; o < num_objects; ++o) {
        std::string id = "id_" + objects[o];
        morphism_index[id] = o;
        morphism_names.push_back(std::move(id));
        dom.push_back(o);
        cod.push_back(o);
    }

    for (const auto& decl : raw.morphisms) {
        if (decl.id.rfind("id_", 0) == 0) {
            flag(ViolationKind::DuplicateId,
                 "morphism '" + decl.id + "' uses the reserved identity prefix", decl.line);
            continue;
        }
        if (morphism_index.count(decl.id)) {
            flag(ViolationKind::DuplicateId, "morphism '" + decl.id + "' declared twice", decl.line);
            continue;
        }
        auto d = object_index.find(decl.dom);
        auto c = object_index.find(decl.cod);
        if (d == object_index.end()) {
            flag(ViolationKind::DanglingReference,
                 "morphism '" + decl.id + "' refers to unknown object '" + decl.dom + "'", decl.line);
        }
        if (c == object_index.end()) {
            flag(ViolationKind::DanglingReference,
                 "morphism '" + decl.id + "' refers to unknown object '" + decl.cod + "'", decl.line);
        }
        if (d == object_index.end() || c == object_index.end()) continue;
        morphism_index[decl.id] = static_cast<int>(morphism_names.size());
        morphism_names.push_back(decl.id);
        dom.push_back(d->second);
        cod.push_back(c->second);
    }
    const int num_morphisms = static_cast<int>(morphism_names.size());

    std::vector<int> comp(static_cast<size_t>(num_morphisms) * num_morphisms, -1);
    auto comp_at = [&](int g, int f) -> int& { return comp[g * num_morphisms + f]; };

    // Identity composites are forced by the identity laws.
    for (int m = 0; m < num_morphisms; ++m) {
        comp_at(cod[m], m) = m;  // id_cod(m) ∘ m
        comp_at(m, dom[m]) = m;  // m ∘ id_dom(m)
    }

    for (const auto& decl : raw.composites) {
        auto describe = [&decl]() { return "compose " + decl.g + " . " + decl.f + " = " + decl.h; };
        int g = -1, f = -1, h = -1;
        bool dangling = false;
        for (const auto* part : {&decl.g, &decl.f, &decl.h}) {
            auto it = morphism_index.find(*part);
            if (it == morphism_index.end()) {
                flag(ViolationKind::DanglingReference,
                     "unknown morphism '" + *part + "' in '" + describe() + "'", decl.line);
                dangling = true;
            } else {
                (part == &decl.g ? g : part == &decl.f ? f : h) = it->second;
            }
        }
        if (dangling) continue;
        if (cod[f] != dom[g]) {
            flag(ViolationKind::TypeMismatch,
                 "'" + describe() + "' declares a composite for a non-composable pair (cod " +
                     decl.f + " = " + objects[cod[f]] + ", dom " + decl.g + " = " + objects[dom[g]] + ")",
                 decl.line);
            continue;
        }
        if (dom[h] != dom[f] || cod[h] != cod[g]) {
            flag(ViolationKind::TypeMismatch,
                 "'" + describe() + "' has a dom/cod mismatch: expected " + objects[dom[f]] +
                     " -> " + objects[cod[g]] + ", got " + objects[dom[h]] + " -> " + objects[cod[h]],
                 decl.line);
            continue;
        }
        bool has_identity = g < num_objects || f < num_objects;
        int& slot = comp_at(g, f);
        if (slot >= 0 && slot != h) {
            if (has_identity) {
                flag(ViolationKind::IdentityLawViolation,
                     "'" + describe() + "' contradicts the identity laws (must be " +
                         morphism_names[slot] + ")",
                     decl.line);
            } else {
                flag(ViolationKind::DuplicateId,
                     "conflicting composites declared for (" + decl.g + ", " + decl.f + ")",
                     decl.line);
            }
            continue;
        }
        if (slot < 0) slot = h;
    }

    // Totality on composable pairs.
    for (int g = 0; g < num_morphisms; ++g) {
        for (int f = 0; f < num_morphisms; ++f) {
            if (cod[f] != dom[g] || comp_at(g, f) >= 0) continue;
            flag(ViolationKind::MissingComposite,
                 "no composite declared for (" + morphism_names[g] + ", " + morphism_names[f] +
                     "), i.e. " + morphism_names[g] + " . " + morphism_names[f]);
        }
    }

    // Associativity over every composable triple; only meaningful once the
    // table is total, so skip when composites are already missing.
    bool table_total = std::none_of(violations.begin(), violations.end(), [](const Violation& v) {
        return v.kind == ViolationKind::MissingComposite || v.kind == ViolationKind::TypeMismatch ||
               v.kind == ViolationKind::IdentityLawViolation || v.kind == ViolationKind::DuplicateId ||
               v.kind == ViolationKind::DanglingReference;
    });
    if (table_total) {
        for (int h = 0; h < num_morphisms; ++h)
            for (int g = 0; g < num_morphisms; ++g) {
                if (cod[g] != dom[h]) continue;
                int hg = comp_at(h, g);
                for (int f = 0; f < num_morphisms; ++f) {
                    if (cod[f] != dom[g]) continue;
                    int gf = comp_at(g, f);
                    if (comp_at(h, gf) != comp_at(hg, f)) {
                        flag(ViolationKind::AssociativityViolation,
                             "associativity fails on (" + morphism_names[h] + ", " + morphism_names[g] +
                                 ", " + morphism_names[f] + "): " + morphism_names[h] + " . (" +
                                 morphism_names[g] + " . " + morphism_names[f] + ") = " +
                                 morphism_names[comp_at(h, gf)] + " but (" + morphism_names[h] + " . " +
                                 morphism_names[g] + ") . " + morphism_names[f] + " = " +
                                 morphism_names[comp_at(hg, f)]);
                    }
                }
            }
    }

    if (!violations.empty()) throw ValidationError("category " + raw.name, std::move(violations));

    FiniteCategory result;
    result.name_ = raw.name;
    result.objects_ = std::move(objects);
    result.morphism_names_ = std::move(morphism_names);
    result.dom_ = std::move(dom);
    result.cod_ = std::move(cod);
    result.comp_ = std::move(comp);
    for (const auto& [id, idx] : object_index) result.object_lookup_.emplace_back(id, idx);
    for (const auto& [id, idx] : morphism_index) result.morphism_lookup_.emplace_back(id, idx);
    return result;
}

CategoryPtr validate_category_ptr(const CategoryDescription& raw) {
    return std::make_shared<const FiniteCategory>(validate_category(raw));
}

bool is_symmetric(const FiniteCategory& c) {
    for (int a = 0; a < c.num_objects(); ++a)
        for (int b = 0; b < c.num_objects(); ++b)
            if (c.hom_nonempty(a, b) && !c.hom_nonempty(b, a)) return false;
    return true;
}

bool is_antisymmetric(const FiniteCategory& c) {
    for (int a = 0; a < c.num_objects(); ++a)
        for (int b = 0; b < c.num_objects(); ++b)
            if (a != b && c.hom_nonempty(a, b) && c.hom_nonempty(b, a)) return false;
    return true;
}

bool is_monoid_class(const FiniteCategory& c) {
    for (int a = 0; a < c.num_objects(); ++a)
        for (int b = 0; b < c.num_objects(); ++b)
            if (a != b && c.hom_nonempty(a, b)) return false;
    return true;
}

CategoryPtr endo_subcategory(const FiniteCategory& c, const std::string& name) {
    CategoryDescription desc;
    desc.name = name;
    for (int o = 0; o < c.num_objects(); ++o) desc.object(c.object_name(o));
    for (int m = c.num_objects(); m < c.num_morphisms(); ++m)
        if (c.dom(m) == c.cod(m))
            desc.morphism(c.morphism_name(m), c.object_name(c.dom(m)), c.object_name(c.cod(m)));
    for (int g = c.num_objects(); g < c.num_morphisms(); ++g) {
        if (c.dom(g) != c.cod(g)) continue;
        for (int f = c.num_objects(); f < c.num_morphisms(); ++f) {
            if (c.dom(f) != c.cod(f) || c.cod(f) != c.dom(g)) continue;
            // Endomorphisms compose to endomorphisms on the same object.
            desc.composite(c.morphism_name(g), c.morphism_name(f),
                           c.morphism_name(c.composite_or_none(g, f)));
        }
    }
    return validate_category_ptr(desc);
}

bool structurally_equal(const FiniteCategory& a, const FiniteCategory& b, bool include_name) {
    if (include_name && a.name() != b.name()) return false;
    if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return false;
    for (int o = 0; o < a.num_objects(); ++o)
        if (b.object_index(a.object_name(o)) < 0) return false;
    std::vector<int> to_b(a.num_morphisms());
    for (int m = 0; m < a.num_morphisms(); ++m) {
        int bm = b.morphism_index(a.morphism_name(m));
        if (bm < 0) return false;
        if (b.object_name(b.dom(bm)) != a.object_name(a.dom(m)) ||
            b.object_name(b.cod(bm)) != a.object_name(a.cod(m)))
            return false;
        to_b[m] = bm;
    }
    for (int g = 0; g < a.num_morphisms(); ++g)
        for (int f = 0; f < a.num_morphisms(); ++f) {
            int h = a.composite_or_none(g, f);
            int bh = b.composite_or_none(to_b[g], to_b[f]);
            if ((h < 0) != (bh < 0)) return false;
            if (h >= 0 && to_b[h] != bh) return false;
        }
    return true;
}

}  // namespace fincat
