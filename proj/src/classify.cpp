#include "sposet/classify.hpp"

namespace sposet {

ClassificationReport classify(const SimplicialPoset& p, const FieldSpec& field) {
    return field_dispatch(field, [&](auto f) { return classify_impl(p, f); });
}

}  // namespace sposet
