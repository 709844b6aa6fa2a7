#include "fos/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace fos {

namespace {

// Decodes one UTF-8 code point starting at s[i]; advances i past it.
// Malformed bytes decode as U+FFFD and advance by one byte.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k < len; ++k) {
    const auto bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += len;
  return cp;
}

// Base letters for U+00C0..U+00FF (Latin-1 supplement). Multi-letter
// expansions (ae, ss, th) are handled separately.
constexpr std::array<char, 64> kLatin1Base = {
    // C0..CF: À Á Â Ã Ä Å Æ Ç È É Ê Ë Ì Í Î Ï
    'a', 'a', 'a', 'a', 'a', 'a', 0, 'c', 'e', 'e', 'e', 'e', 'i', 'i', 'i',
    'i',
    // D0..DF: Ð Ñ Ò Ó Ô Õ Ö × Ø Ù Ú Û Ü Ý Þ ß
    'd', 'n', 'o', 'o', 'o', 'o', 'o', 0, 'o', 'u', 'u', 'u', 'u', 'y', 0, 0,
    // E0..EF: à á â ã ä å æ ç è é ê ë ì í î ï
    'a', 'a', 'a', 'a', 'a', 'a', 0, 'c', 'e', 'e', 'e', 'e', 'i', 'i', 'i',
    'i',
    // F0..FF: ð ñ ò ó ô õ ö ÷ ø ù ú û ü ý þ ÿ
    'd', 'n', 'o', 'o', 'o', 'o', 'o', 0, 'o', 'u', 'u', 'u', 'u', 'y', 0,
    'y'};

// Base letters for U+0100..U+017F (Latin Extended-A). The block alternates
// upper/lower variants of the same base letter in runs, so a dense table is
// the simplest correct mapping.
constexpr char kExtATable[129] =
    "aaaaaaccccccccdd"   // 0100-010F: Ā ā Ă ă Ą ą Ć ć Ĉ ĉ Ċ ċ Č č Ď ď
    "ddeeeeeeeeeegggg"   // 0110-011F: Đ đ Ē ē Ĕ ĕ Ė ė Ę ę Ě ě Ĝ ĝ Ğ ğ
    "gggghhhhiiiiiiii"   // 0120-012F
    "iijjjjkkklllllll"   // 0130-013F
    "lllnnnnnnnnnoooo"   // 0140-014F (ŉ, Ŋ ŋ fold to n; Ō ō ...)
    "oooorrrrrrssssss"   // 0150-015F (Œ œ handled separately at 0152/0153)
    "ssttttttuuuuuuuu"   // 0160-016F
    "uuuuwwyyyzzzzzzs";  // 0170-017F (ſ -> s)

// Appends the folded form of one code point: lowercase ASCII alphanumerics
// pass through, accented Latin letters fold to base letters, everything
// else becomes a separator (returns false).
bool fold_codepoint(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    const auto c = static_cast<unsigned char>(cp);
    if (std::isalnum(c)) {
      out.push_back(static_cast<char>(std::tolower(c)));
      return true;
    }
    return false;
  }
  if (cp >= 0xC0 && cp <= 0xFF) {
    switch (cp) {
      case 0xC6:
      case 0xE6:
        out += "ae";
        return true;
      case 0xDE:
      case 0xFE:
        out += "th";
        return true;
      case 0xDF:
        out += "ss";
        return true;
      default: {
        const char base = kLatin1Base[cp - 0xC0];
        if (base == 0) return false;  // × ÷
        out.push_back(base);
        return true;
      }
    }
  }
  if (cp >= 0x100 && cp <= 0x17F) {
    if (cp == 0x152 || cp == 0x153) {
      out += "oe";
      return true;
    }
    if (cp == 0x132 || cp == 0x133) {
      out += "ij";
      return true;
    }
    out.push_back(kExtATable[cp - 0x100]);
    return true;
  }
  // Everything beyond Latin Extended-A is treated as a separator.
  return false;
}

}  // namespace

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> tokens;
  Token cur;
  bool in_token = false;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t start = i;
    const char32_t cp = decode_utf8(s, i);
    std::string folded;
    if (fold_codepoint(cp, folded)) {
      if (!in_token) {
        cur = Token{};
        cur.begin = start;
        in_token = true;
      }
      cur.text += folded;
      cur.end = i;
    } else if (in_token) {
      tokens.push_back(std::move(cur));
      in_token = false;
    }
  }
  if (in_token) tokens.push_back(std::move(cur));
  return tokens;
}

std::string normalize_title(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (const Token& t : tokenize(s)) {
    if (!out.empty()) out.push_back(' ');
    out += t.text;
  }
  return out;
}

int levenshtein(std::string_view a, std::string_view b, int max_interesting) {
  const int la = static_cast<int>(a.size());
  const int lb = static_cast<int>(b.size());
  if (std::abs(la - lb) > max_interesting) return max_interesting + 1;
  if (la == 0) return lb;
  if (lb == 0) return la;

  std::vector<int> prev(lb + 1), cur(lb + 1);
  for (int j = 0; j <= lb; ++j) prev[j] = j;
  for (int i = 1; i <= la; ++i) {
    cur[0] = i;
    int row_min = cur[0];
    for (int j = 1; j <= lb; ++j) {
      const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > max_interesting) return max_interesting + 1;
    std::swap(prev, cur);
  }
  return prev[lb];
}

}  // namespace fos
