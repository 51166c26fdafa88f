#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kgmatch::text {

// Pinned English stopword list (33 words). Checked after lowercasing,
// before stemming.
bool is_stopword(std::string_view word);

// Classic Porter stemmer over lowercase ASCII words; words of length <= 2
// and non-alphabetic input are returned unchanged.
std::string porter_stem(std::string_view word);

// Sentence boundaries: '.', '!' or '?' followed by whitespace.
std::vector<std::string_view> split_sentences(std::string_view text);

// Full literal pipeline: sentence splitting, tokenization, lowercasing,
// stopword removal, stemming. Returns a token multiset in text order.
std::vector<std::string> tokenize_literal(std::string_view text);

// Fragment pipeline: camel-case and separator splitting ('-', '_', '~' and
// any other non-alphanumeric byte), lowercasing, stopword removal,
// stemming. No sentence splitting.
std::vector<std::string> tokenize_fragment(std::string_view fragment);

}  // namespace kgmatch::text
