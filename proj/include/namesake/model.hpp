#pragma once
// Core data model: normalized author-name occurrences, name roots, datasets,
// and the cluster partitions produced by a disambiguation method.
//
// A "root" is the last name plus the first initial. The middle token is the
// initials string after the first one; it is empty when no middle initial was
// reported. All strings are normalized to uppercase ASCII A-Z before they
// enter the model, so name comparison everywhere is plain string equality.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace namesake {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// ASCII foldings for U+00C0..U+017F (Latin-1 supplement and Latin Extended-A).
// Case is discarded here since the model stores uppercase only.
// Entries for non-letters (multiplication/division signs) are empty.
inline const char* fold_latin(char32_t cp) {
  static const char* const kTable[] = {
      // U+00C0..U+00CF
      "A", "A", "A", "A", "A", "A", "AE", "C", "E", "E", "E", "E", "I", "I", "I", "I",
      // U+00D0..U+00DF
      "D", "N", "O", "O", "O", "O", "O", "", "O", "U", "U", "U", "U", "Y", "TH", "SS",
      // U+00E0..U+00EF
      "A", "A", "A", "A", "A", "A", "AE", "C", "E", "E", "E", "E", "I", "I", "I", "I",
      // U+00F0..U+00FF
      "D", "N", "O", "O", "O", "O", "O", "", "O", "U", "U", "U", "U", "Y", "TH", "Y",
      // U+0100..U+010F
      "A", "A", "A", "A", "A", "A", "C", "C", "C", "C", "C", "C", "C", "C", "D", "D",
      // U+0110..U+011F
      "D", "D", "E", "E", "E", "E", "E", "E", "E", "E", "E", "E", "G", "G", "G", "G",
      // U+0120..U+012F
      "G", "G", "G", "G", "H", "H", "H", "H", "I", "I", "I", "I", "I", "I", "I", "I",
      // U+0130..U+013F
      "I", "I", "IJ", "IJ", "J", "J", "K", "K", "K", "L", "L", "L", "L", "L", "L", "L",
      // U+0140..U+014F
      "L", "L", "L", "N", "N", "N", "N", "N", "N", "N", "N", "N", "O", "O", "O", "O",
      // U+0150..U+015F
      "O", "O", "OE", "OE", "R", "R", "R", "R", "R", "R", "S", "S", "S", "S", "S", "S",
      // U+0160..U+016F
      "S", "S", "T", "T", "T", "T", "T", "T", "U", "U", "U", "U", "U", "U", "U", "U",
      // U+0170..U+017F
      "U", "U", "U", "U", "W", "W", "Y", "Y", "Y", "Z", "Z", "Z", "Z", "Z", "Z", "S",
  };
  if (cp < 0xC0 || cp > 0x17F) return nullptr;
  return kTable[cp - 0xC0];
}

// Appends the uppercase ASCII letters of a UTF-8 string to `out`, folding
// accented Latin letters to their base letters and dropping everything else.
inline void append_folded_letters(std::string_view utf8, std::string& out) {
  for (std::size_t i = 0; i < utf8.size();) {
    const unsigned char b0 = static_cast<unsigned char>(utf8[i]);
    char32_t cp = 0;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0 && i + 1 < utf8.size()) {
      cp = (b0 & 0x1Fu) << 6 | (static_cast<unsigned char>(utf8[i + 1]) & 0x3Fu);
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0 && i + 2 < utf8.size()) {
      cp = (b0 & 0x0Fu) << 12 | (static_cast<unsigned char>(utf8[i + 1]) & 0x3Fu) << 6 |
           (static_cast<unsigned char>(utf8[i + 2]) & 0x3Fu);
      len = 3;
    }
    i += len;
    if (cp >= 'A' && cp <= 'Z') {
      out.push_back(static_cast<char>(cp));
    } else if (cp >= 'a' && cp <= 'z') {
      out.push_back(static_cast<char>(cp - 'a' + 'A'));
    } else if (const char* folded = fold_latin(cp)) {
      out.append(folded);
    }
    // Digits, punctuation, spaces, and unfoldable codepoints are dropped.
  }
}

}  // namespace detail

inline bool is_upper_alpha(std::string_view s) {
  for (char c : s)
    if (c < 'A' || c > 'Z') return false;
  return true;
}

struct NormalizedName {
  std::string last_name;
  char first_initial = '\0';
  std::string middle_token;

  bool operator==(const NormalizedName&) const = default;
};

// Splits a raw "Last, FIM" author string into its normalized parts. The text
// before the first comma is the last name; every alphabetic character after
// the comma contributes an initial, the first of which becomes the first
// initial and the rest the middle token.
inline NormalizedName normalize_author_name(std::string_view raw) {
  const auto comma = raw.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("malformed author name (no comma): \"" + std::string(raw) + "\"");

  NormalizedName name;
  detail::append_folded_letters(raw.substr(0, comma), name.last_name);
  if (name.last_name.empty())
    throw ParseError("malformed author name (empty last name): \"" + std::string(raw) + "\"");

  std::string initials;
  detail::append_folded_letters(raw.substr(comma + 1), initials);
  if (initials.empty())
    throw ParseError("malformed author name (no initials): \"" + std::string(raw) + "\"");
  name.first_initial = initials.front();
  name.middle_token = initials.substr(1);
  return name;
}

// Last name plus first initial: the grouping key of the first-initial method
// and the scope in which the hybrid method counts middle initials.
struct Root {
  std::string last_name;
  char first_initial = '\0';

  auto operator<=>(const Root&) const = default;
};

// One appearance of an author name on one publication. true_author_id is
// present exactly when the occurrence comes from a simulated dataset.
struct NameOccurrence {
  std::int64_t record_id = 0;
  std::int64_t paper_id = 0;
  std::optional<std::int64_t> true_author_id;
  std::string last_name;
  char first_initial = '\0';
  std::string middle_token;

  bool has_middle() const { return !middle_token.empty(); }

  void validate() const {
    if (last_name.empty() || !is_upper_alpha(last_name))
      throw std::invalid_argument("occurrence " + std::to_string(record_id) +
                                  ": last name must be non-empty uppercase A-Z");
    if (first_initial < 'A' || first_initial > 'Z')
      throw std::invalid_argument("occurrence " + std::to_string(record_id) +
                                  ": first initial must be a single letter A-Z");
    if (!middle_token.empty() && !is_upper_alpha(middle_token))
      throw std::invalid_argument("occurrence " + std::to_string(record_id) +
                                  ": middle token must be uppercase A-Z");
  }
};

inline Root root_of(const NameOccurrence& occ) {
  return Root{occ.last_name, occ.first_initial};
}

enum class Provenance { simulated, empirical };

// A collection of occurrences plus provenance. Simulated datasets carry the
// true identity of every occurrence; empirical ones never do. paper_year is
// populated when the source format carried a publication year per paper.
struct Dataset {
  std::vector<NameOccurrence> occurrences;
  Provenance provenance = Provenance::empirical;
  std::string label;
  std::map<std::int64_t, int> paper_year;

  std::size_t size() const { return occurrences.size(); }
  bool empty() const { return occurrences.empty(); }

  void validate() const {
    std::set<std::int64_t> seen;
    for (const NameOccurrence& occ : occurrences) {
      occ.validate();
      if (!seen.insert(occ.record_id).second)
        throw std::invalid_argument("duplicate record_id " + std::to_string(occ.record_id));
      if (provenance == Provenance::simulated && !occ.true_author_id)
        throw std::invalid_argument("simulated dataset: occurrence " +
                                    std::to_string(occ.record_id) + " lacks true_author_id");
      if (provenance == Provenance::empirical && occ.true_author_id)
        throw std::invalid_argument("empirical dataset: occurrence " +
                                    std::to_string(occ.record_id) + " carries true_author_id");
    }
  }
};

// Output of a disambiguation method: a cluster label per record. Cluster ids
// are arbitrary; only the induced grouping is meaningful.
struct Partition {
  std::map<std::int64_t, std::int64_t> assignment;

  std::size_t size() const { return assignment.size(); }

  bool total_over(const Dataset& ds) const {
    if (assignment.size() != ds.occurrences.size()) return false;
    for (const NameOccurrence& occ : ds.occurrences)
      if (!assignment.contains(occ.record_id)) return false;
    return true;
  }
};

}  // namespace namesake
