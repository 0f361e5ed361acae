// Copyright 2026 The mpcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mpcc/source_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

namespace fs = std::filesystem;

namespace mpcc {

std::string_view to_string(Construct c) {
  switch (c) {
    case Construct::If: return "if";
    case Construct::While: return "while";
    case Construct::DoWhile: return "do_while";
    case Construct::ForCondition: return "for_condition";
    case Construct::Ternary: return "ternary";
    case Construct::SwitchGuard: return "switch_guard";
  }
  return "?";
}

std::string Diagnostic::format() const {
  std::ostringstream os;
  os << file.generic_string() << ':' << line << ": " << reason;
  return os.str();
}

void IngestReport::absorb(const IngestReport &other) {
  files_seen += other.files_seen;
  files_parsed += other.files_parsed;
  sites_extracted += other.sites_extracted;
  sites_skipped += other.sites_skipped;
  skip_diagnostics.insert(skip_diagnostics.end(), other.skip_diagnostics.begin(),
                          other.skip_diagnostics.end());
}

const std::vector<std::string> &default_extensions() {
  static const std::vector<std::string> kExt = {".c", ".h", ".cc", ".cpp", ".hpp", ".cxx"};
  return kExt;
}

namespace {

bool has_extension(const fs::path &p, const std::vector<std::string> &extensions) {
  std::string ext = p.extension().string();
  return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
}

void note(IngestReport *report, const fs::path &file, std::string reason) {
  if (report) report->skip_diagnostics.push_back({file, 0, std::move(reason)});
}

}  // namespace

std::vector<fs::path> walk_sources(const std::vector<fs::path> &roots,
                                   const std::vector<std::string> &extensions,
                                   IngestReport *report) {
  std::vector<fs::path> out;
  for (const auto &root : roots) {
    std::error_code ec;
    auto st = fs::symlink_status(root, ec);
    if (ec || !fs::exists(st)) throw IngestError("cannot read source root: " + root.string());
    if (fs::is_regular_file(st)) {
      if (has_extension(root, extensions)) out.push_back(root);
      continue;
    }
    if (!fs::is_directory(st)) throw IngestError("not a directory or regular file: " + root.string());
    fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
    if (ec) throw IngestError("cannot read source root: " + root.string() + ": " + ec.message());
    for (fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
      if (ec) {
        note(report, root, "cannot read directory entry: " + ec.message());
        ec.clear();
        break;
      }
      auto entry_status = it->symlink_status(ec);
      if (ec) {
        note(report, it->path(), "cannot stat: " + ec.message());
        ec.clear();
        continue;
      }
      if (fs::is_symlink(entry_status)) {
        it.disable_recursion_pending();
        continue;
      }
      if (fs::is_directory(entry_status)) {
        // Probe readability so one locked directory does not end the walk.
        fs::directory_iterator probe(it->path(), ec);
        if (ec) {
          note(report, it->path(), "cannot read directory: " + ec.message());
          it.disable_recursion_pending();
          ec.clear();
        }
        continue;
      }
      if (fs::is_regular_file(entry_status) && has_extension(it->path(), extensions))
        out.push_back(it->path());
    }
  }
  std::sort(out.begin(), out.end(),
            [](const fs::path &a, const fs::path &b) { return a.string() < b.string(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len;
    char32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      return false;
    i += len;
  }
  return true;
}

namespace {

bool ident_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '$' || u >= 0x80;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

std::string mask_source(std::string_view text) {
  std::string out(text);
  const std::size_t n = text.size();
  auto blank = [&](std::size_t k) {
    if (out[k] != '\n') out[k] = ' ';
  };
  bool line_start = true;  // only whitespace since the last newline
  std::size_t i = 0;
  while (i < n) {
    char c = text[i];
    // Comments.
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n') {
        if (text[i] == '\\' && i + 1 < n && text[i + 1] == '\n') {
          blank(i);
          i += 2;
          continue;
        }
        blank(i++);
      }
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      blank(i++);
      blank(i++);
      while (i < n && !(text[i] == '*' && i + 1 < n && text[i + 1] == '/')) blank(i++);
      if (i < n) {
        blank(i++);
        blank(i++);
      }
      continue;
    }
    // Preprocessor directives, with continuations and embedded comments.
    if (c == '#' && line_start) {
      while (i < n && text[i] != '\n') {
        if (text[i] == '\\' && i + 1 < n && text[i + 1] == '\n') {
          blank(i);
          i += 2;
          continue;
        }
        if (text[i] == '/' && i + 1 < n && text[i + 1] == '*') {
          while (i < n && !(text[i] == '*' && i + 1 < n && text[i + 1] == '/')) blank(i++);
          if (i < n) {
            blank(i++);
            blank(i++);
          }
          continue;
        }
        blank(i++);
      }
      continue;
    }
    if (c == '\n') {
      line_start = true;
      ++i;
      continue;
    }
    if (is_space(c)) {
      ++i;
      continue;
    }
    line_start = false;
    // Identifiers and numbers, so literal prefixes and digit separators are
    // recognized in context.
    if (ident_char(c)) {
      std::size_t start = i;
      bool number = std::isdigit(static_cast<unsigned char>(c));
      while (i < n && (ident_char(text[i]) ||
                       (number && (text[i] == '.' || (text[i] == '\'' && i + 1 < n &&
                                                       std::isxdigit(static_cast<unsigned char>(text[i + 1]))) ||
                                   ((text[i] == '+' || text[i] == '-') &&
                                    (text[i - 1] == 'e' || text[i - 1] == 'E' ||
                                     text[i - 1] == 'p' || text[i - 1] == 'P'))))))
        ++i;
      std::string_view word = text.substr(start, i - start);
      if (!number && i < n && text[i] == '"' && !word.empty() && word.back() == 'R' &&
          (word == "R" || word == "LR" || word == "uR" || word == "UR" || word == "u8R")) {
        std::size_t open = text.find('(', i + 1);
        if (open != std::string_view::npos) {
          std::string close = ")";
          close += text.substr(i + 1, open - i - 1);
          close += '"';
          std::size_t end = text.find(close, open + 1);
          std::size_t stop = end == std::string_view::npos ? n : end + close.size();
          for (std::size_t k = i + 1; k + 1 < stop; ++k) blank(k);
          i = stop;
          continue;
        }
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      char quote = c;
      ++i;
      while (i < n && text[i] != quote && text[i] != '\n') {
        if (text[i] == '\\' && i + 1 < n) {
          blank(i++);
          if (text[i] == '\n') {
            ++i;
            continue;
          }
        }
        blank(i++);
      }
      if (i < n && text[i] == quote) ++i;
      continue;
    }
    ++i;
  }
  return out;
}

namespace {

class LineIndex {
 public:
  explicit LineIndex(std::string_view text) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] == '\n') starts_.push_back(i + 1);
  }

  std::pair<std::size_t, std::size_t> locate(std::size_t offset) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - starts_.begin());
    return {line, offset - starts_[line - 1] + 1};
  }

 private:
  std::vector<std::size_t> starts_;
};

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

struct Group {
  enum class Status { Ok, Unbalanced };
  Status status;
  std::size_t close;                  // index of ')' when Ok
  std::size_t resume;                 // where scanning continues when Unbalanced
  std::vector<std::size_t> top_semis;  // ';' at the group's own depth
};

// Balances the parenthesis group opening at `open` over masked text.
Group match_group(const std::string &m, std::size_t open) {
  Group g{Group::Status::Unbalanced, 0, m.size(), {}};
  int parens = 0;
  int braces = 0;
  for (std::size_t i = open; i < m.size(); ++i) {
    char c = m[i];
    if (c == '(') {
      ++parens;
    } else if (c == ')') {
      if (--parens == 0) {
        g.status = Group::Status::Ok;
        g.close = i;
        return g;
      }
    } else if (c == '{') {
      ++braces;
    } else if (c == '}') {
      if (--braces < 0) {
        g.resume = i;
        return g;
      }
    } else if (c == ';' && parens == 1 && braces == 0) {
      g.top_semis.push_back(i);
    }
  }
  return g;
}

std::size_t skip_space(const std::string &m, std::size_t i) {
  while (i < m.size() && is_space(m[i])) ++i;
  return i;
}

bool word_at(const std::string &m, std::size_t i, std::string_view w) {
  return m.compare(i, w.size(), w) == 0 && (i + w.size() >= m.size() || !ident_char(m[i + w.size()]));
}

class Extractor {
 public:
  Extractor(std::string_view text, const fs::path &file)
      : text_(text), masked_(mask_source(text)), lines_(text), file_(file) {}

  Extraction run() {
    scan_keywords();
    scan_ternaries();
    std::sort(out_.sites.begin(), out_.sites.end(),
              [](const ConditionSite &a, const ConditionSite &b) { return a.offset < b.offset; });
    out_.sites.erase(std::unique(out_.sites.begin(), out_.sites.end(),
                                 [](const ConditionSite &a, const ConditionSite &b) {
                                   return a.offset == b.offset;
                                 }),
                     out_.sites.end());
    out_.report.sites_extracted = out_.sites.size();
    return std::move(out_);
  }

 private:
  std::string_view text_;
  std::string masked_;
  LineIndex lines_;
  fs::path file_;
  Extraction out_;
  std::vector<std::pair<std::size_t, std::size_t>> skipped_ranges_;

  void skip(std::size_t offset, std::string reason) {
    out_.report.sites_skipped++;
    out_.report.skip_diagnostics.push_back({file_, lines_.locate(offset).first, std::move(reason)});
  }

  void emit(Construct construct, std::size_t located, std::size_t begin, std::size_t end) {
    std::string_view raw = trim(text_.substr(begin, end - begin));
    if (raw.empty()) {
      skip(located, std::string("empty ") + std::string(to_string(construct)) + " predicate");
      return;
    }
    auto [line, col] = lines_.locate(located);
    out_.sites.push_back({file_, line, col, construct, std::string(raw), located});
  }

  void scan_keywords() {
    const std::string &m = masked_;
    std::vector<int> pending_do;  // brace depths of unmatched `do`
    int depth = 0;
    std::size_t i = 0;
    while (i < m.size()) {
      char c = m[i];
      if (c == '{') {
        ++depth;
        ++i;
        continue;
      }
      if (c == '}') {
        --depth;
        while (!pending_do.empty() && pending_do.back() > depth) pending_do.pop_back();
        ++i;
        continue;
      }
      if (!ident_char(c)) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < m.size() && ident_char(m[i])) ++i;
      if (start > 0 && (m[start - 1] == '.' || (start > 1 && m[start - 1] == '>' && m[start - 2] == '-')))
        continue;
      std::string_view word(m.data() + start, i - start);
      if (word == "do") {
        pending_do.push_back(depth);
        continue;
      }
      Construct construct;
      if (word == "if") {
        construct = Construct::If;
      } else if (word == "while") {
        construct = Construct::While;
      } else if (word == "for") {
        construct = Construct::ForCondition;
      } else if (word == "switch") {
        construct = Construct::SwitchGuard;
      } else {
        continue;
      }
      std::size_t open = skip_space(m, i);
      if (construct == Construct::If) {
        if (word_at(m, open, "constexpr")) open = skip_space(m, open + 9);
        if (open < m.size() && m[open] == '!') open = skip_space(m, open + 1);
        if (word_at(m, open, "consteval")) continue;
      }
      if (open >= m.size() || m[open] != '(') continue;
      Group g = match_group(m, open);
      if (g.status == Group::Status::Unbalanced) {
        skip(open, "unbalanced parentheses; skipping to end of enclosing scope");
        skipped_ranges_.emplace_back(open, g.resume);
        i = g.resume;
        continue;
      }
      std::size_t begin = open + 1;
      std::size_t end = g.close;
      switch (construct) {
        case Construct::ForCondition:
          if (g.top_semis.size() != 2) break;  // range-for or malformed
          if (trim(text_.substr(g.top_semis[0] + 1, g.top_semis[1] - g.top_semis[0] - 1)).empty())
            break;
          emit(construct, open, g.top_semis[0] + 1, g.top_semis[1]);
          break;
        case Construct::While: {
          std::size_t after = skip_space(m, g.close + 1);
          bool closes_do = !pending_do.empty() && pending_do.back() == depth &&
                           after < m.size() && m[after] == ';';
          if (closes_do) pending_do.pop_back();
          emit(closes_do ? Construct::DoWhile : Construct::While, open, begin, end);
          break;
        }
        default:
          if (!g.top_semis.empty()) begin = g.top_semis.back() + 1;  // init-statement
          emit(construct, open, begin, end);
          break;
      }
      // Continue inside the group so nested constructs are found too.
    }
  }

  bool in_skipped_range(std::size_t offset) const {
    return std::any_of(skipped_ranges_.begin(), skipped_ranges_.end(),
                       [&](const auto &r) { return offset >= r.first && offset < r.second; });
  }

  static bool stop_word(std::string_view w) {
    return w == "return" || w == "case" || w == "throw" || w == "else" || w == "do" ||
           w == "co_return" || w == "co_yield";
  }

  static bool control_word(std::string_view w) {
    return w == "if" || w == "while" || w == "for" || w == "switch" || w == "constexpr";
  }

  // Word ending just before `end` (exclusive), or empty.
  std::string_view word_before(std::size_t end) const {
    std::size_t e = end;
    while (e > 0 && is_space(masked_[e - 1])) --e;
    std::size_t b = e;
    while (b > 0 && ident_char(masked_[b - 1])) --b;
    return std::string_view(masked_).substr(b, e - b);
  }

  // Start offset of the condition operand ending at the '?' at `q`.
  std::size_t ternary_start(std::size_t q) const {
    const std::string &m = masked_;
    std::size_t i = q;
    while (i > 0) {
      char c = m[i - 1];
      if (c == ')' || c == ']') {
        char open = c == ')' ? '(' : '[';
        int d = 0;
        std::size_t k = i;
        while (k > 0) {
          char ck = m[k - 1];
          if (ck == c) ++d;
          if (ck == open && --d == 0) break;
          if (ck == '{' || ck == '}' || ck == ';') return i;  // malformed; stop here
          --k;
        }
        if (k == 0) return i;
        if (c == ')' && control_word(word_before(k - 1))) return i;
        i = k - 1;
        continue;
      }
      if (c == '(' || c == '[' || c == '{' || c == '}' || c == ';' || c == ',' || c == '?')
        return i;
      if (c == ':') {
        if (i >= 2 && m[i - 2] == ':') {
          i -= 2;
          continue;
        }
        return i;
      }
      if (c == '=') {
        char p = i >= 2 ? m[i - 2] : '\0';
        bool shift_assign = (p == '<' || p == '>') && i >= 3 && m[i - 3] == p;
        if (p == '=' || p == '!' || ((p == '<' || p == '>') && !shift_assign)) {
          i -= 2;
          continue;
        }
        return i;  // assignment or compound assignment
      }
      if (ident_char(c)) {
        std::size_t e = i;
        while (i > 0 && ident_char(m[i - 1])) --i;
        std::string_view w(m.data() + i, e - i);
        if (stop_word(w)) return e;
        continue;
      }
      --i;
    }
    return 0;
  }

  void scan_ternaries() {
    const std::string &m = masked_;
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (m[q] != '?') continue;
      if (in_skipped_range(q)) continue;
      std::size_t begin = ternary_start(q);
      std::size_t first = begin;
      while (first < q && is_space(text_[first])) ++first;
      if (first == q) {
        skip(q, "empty ternary condition");
        continue;
      }
      emit(Construct::Ternary, first, first, q);
    }
  }
};

}  // namespace

Extraction extract_conditions(std::string_view text, const fs::path &file) {
  return Extractor(text, file).run();
}

Extraction extract_file(const fs::path &file) {
  Extraction out;
  out.report.files_seen = 1;
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    out.report.skip_diagnostics.push_back({file, 0, "cannot open file"});
    return out;
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    out.report.skip_diagnostics.push_back({file, 0, "read error"});
    return out;
  }
  if (!is_valid_utf8(text)) {
    out.report.skip_diagnostics.push_back({file, 0, "invalid UTF-8; file skipped"});
    return out;
  }
  Extraction ex = extract_conditions(text, file);
  ex.report.files_seen = 1;
  ex.report.files_parsed = 1;
  return ex;
}

}  // namespace mpcc
