#pragma once

#include <array>
#include <string_view>

namespace scmine::data {

// Default English stopword list (175 words). Overridable at the CLI.
inline constexpr std::array<std::string_view, 175> kStopwords = {{
    "a", "about", "above", "across", "after", "again", "against", "all",
    "along", "already", "also", "although", "always", "am", "among", "amongst",
    "an", "and", "any", "are", "around", "as", "at", "be",
    "because", "been", "before", "behind", "being", "below", "beside", "besides",
    "between", "beyond", "both", "but", "by", "cannot", "could", "despite",
    "did", "do", "does", "doing", "down", "during", "each", "either",
    "else", "ever", "except", "few", "for", "from", "further", "had",
    "has", "have", "having", "he", "hence", "her", "here", "hers",
    "herself", "him", "himself", "his", "how", "however", "i", "if",
    "in", "inside", "into", "is", "it", "its", "itself", "just",
    "may", "me", "might", "more", "most", "must", "my", "myself",
    "near", "neither", "never", "no", "nor", "not", "now", "of",
    "off", "often", "on", "once", "only", "onto", "or", "other",
    "ought", "our", "ours", "ourselves", "out", "outside", "over", "own",
    "per", "quite", "rather", "really", "same", "shall", "she", "should",
    "since", "so", "some", "sometimes", "soon", "still", "such", "than",
    "that", "the", "their", "theirs", "them", "themselves", "then", "there",
    "therefore", "these", "they", "this", "those", "though", "through", "thus",
    "to", "too", "toward", "towards", "under", "underneath", "unless", "until",
    "up", "upon", "very", "via", "was", "we", "were", "what",
    "when", "where", "whereas", "whether", "which", "while", "who", "whom",
    "why", "will", "with", "within", "without", "would", "yet",
}};

} // namespace scmine::data
