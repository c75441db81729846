#include "kosnet/keyword.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

#include "kosnet/error.hpp"
#include "kosnet/kos.hpp"

namespace kosnet {

namespace {

constexpr std::string_view kPseudoPrefix = "urn:kw:";

const icu::Normalizer2& instance(const icu::Normalizer2* (*get)(UErrorCode&)) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = get(status);
    if (U_FAILURE(status) || n == nullptr) throw std::runtime_error(u_errorName(status));
    return *n;
}

}  // namespace

std::string normalize_label(std::string_view label) {
    // NFKC_Casefold folds case and compatibility forms in one closed step; the
    // NFKD pass then splits base letters from their combining marks.
    static const icu::Normalizer2& fold = instance(&icu::Normalizer2::getNFKCCasefoldInstance);
    static const icu::Normalizer2& decompose = instance(&icu::Normalizer2::getNFKDInstance);

    UErrorCode status = U_ZERO_ERROR;
    icu::UnicodeString text = icu::UnicodeString::fromUTF8(
        icu::StringPiece(label.data(), static_cast<int32_t>(label.size())));
    text = fold.normalize(text, status);
    text = decompose.normalize(text, status);
    if (U_FAILURE(status)) return {};

    icu::UnicodeString kept;
    for (int32_t i = 0; i < text.length(); i = text.moveIndex32(i, 1)) {
        const UChar32 cp = text.char32At(i);
        if (u_isalnum(cp)) kept.append(cp);
    }
    std::string out;
    kept.toUTF8String(out);
    return out;
}

Iri pseudo_concept(std::string_view key) { return Iri(kPseudoPrefix) + std::string(key); }

bool is_pseudo_concept(std::string_view iri) { return iri.starts_with(kPseudoPrefix); }

Resolution resolve_keyword(const KosIndex& k, std::string_view keyword) {
    Resolution r;
    r.keyword = std::string(keyword);
    r.key = normalize_label(keyword);
    if (r.key.empty()) throw EmptyKey(r.keyword);

    auto it = k.label_index().find(r.key);
    if (it == k.label_index().end() || it->second.empty()) {
        r.concept_iri = pseudo_concept(r.key);
        return r;
    }
    r.concept_iri = *it->second.begin();
    r.resolved = true;
    r.ambiguous = it->second.size() > 1;
    return r;
}

}  // namespace kosnet
