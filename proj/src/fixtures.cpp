#include "fincat/verify.hpp"

namespace fincat::fixtures {

CategoryPtr terminal() {
    static CategoryPtr c = validate_category_ptr(CategoryDescription{"one"}.object("star"));
    return c;
}

CategoryPtr walking_arrow() {
    static CategoryPtr c = validate_category_ptr(
        CategoryDescription{"two"}.object("a").object("b").morphism("u", "a", "b"));
    return c;
}

CategoryPtr walking_iso() {
    static CategoryPtr c = validate_category_ptr(CategoryDescription{"iso"}
                                                     .object("a")
                                                     .object("b")
                                                     .morphism("u", "a", "b")
                                                     .morphism("v", "b", "a")
                                                     .composite("v", "u", "id_a")
                                                     .composite("u", "v", "id_b"));
    return c;
}

CategoryPtr involution() {
    static CategoryPtr c = validate_category_ptr(
        CategoryDescription{"m"}.object("m").morphism("s", "m", "m").composite("s", "s", "id_m"));
    return c;
}

CategoryPtr discrete_pair() {
    static CategoryPtr c =
        validate_category_ptr(CategoryDescription{"d2"}.object("a").object("b"));
    return c;
}

CategoryPtr span() {
    static CategoryPtr c = validate_category_ptr(CategoryDescription{"span"}
                                                     .object("a")
                                                     .object("b")
                                                     .object("c")
                                                     .morphism("f", "b", "a")
                                                     .morphism("g", "b", "c"));
    return c;
}

std::vector<CategoryPtr> all() {
    return {terminal(), walking_arrow(), walking_iso(), involution(), discrete_pair(), span()};
}

}  // namespace fincat::fixtures
