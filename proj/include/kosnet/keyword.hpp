#pragma once

#include <string>
#include <string_view>

#include "kosnet/types.hpp"

namespace kosnet {

class KosIndex;

/// Lexical key used for grouping labels and keywords: case-folded,
/// compatibility-decomposed, combining marks stripped, and everything that is
/// not a letter or digit removed. "e-Learning" and "elearning" share a key.
/// Total: invalid UTF-8 sequences are dropped.
std::string normalize_label(std::string_view label);

/// IRI minted for a keyword that matches no scheme label.
Iri pseudo_concept(std::string_view key);
bool is_pseudo_concept(std::string_view iri);

struct Resolution {
    std::string keyword;
    std::string key;
    Iri concept_iri;
    bool resolved = false;
    /// Two or more scheme concepts share the key; the smallest IRI was chosen.
    bool ambiguous = false;

    bool operator==(const Resolution&) const = default;
};

/// Throws EmptyKey when the keyword normalizes to "".
Resolution resolve_keyword(const KosIndex& k, std::string_view keyword);

}  // namespace kosnet
