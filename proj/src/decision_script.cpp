#include "lpbsa/decision_script.hpp"

#include <charconv>
#include <sstream>

namespace lpbsa {

namespace script {

std::string_view keyword(const Record& r) {
  struct Visitor {
    std::string_view operator()(const Init&) const { return "INIT"; }
    std::string_view operator()(const Subpop&) const { return "SUBPOP"; }
    std::string_view operator()(const Pair&) const { return "PAIR"; }
    std::string_view operator()(const Force&) const { return "FORCE"; }
    std::string_view operator()(const MutBit&) const { return "MUTBIT"; }
    std::string_view operator()(const Thresh&) const { return "THRESH"; }
    std::string_view operator()(const Verdict& v) const { return v.accept ? "ACCEPT" : "REJECT"; }
  };
  return std::visit(Visitor{}, r);
}

}  // namespace script

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string gene_name(std::size_t gene) { return "X" + std::to_string(gene + 1); }

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class T>
T parse_number(std::string_view tok, std::size_t line, std::string_view what) {
  T value{};
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
    throw ScriptParseError(line, "bad " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return value;
}

std::size_t parse_gene(std::string_view tok, std::size_t line) {
  if (tok.size() < 2 || tok[0] != 'X') {
    throw ScriptParseError(line, "bad gene name '" + std::string(tok) + "'");
  }
  const auto n = parse_number<std::size_t>(tok.substr(1), line, "gene index");
  if (n == 0) throw ScriptParseError(line, "gene names start at X1");
  return n - 1;
}

void expect_arity(const std::vector<std::string_view>& t, std::size_t n, std::size_t line) {
  if (t.size() != n) {
    throw ScriptParseError(line, std::string(t[0]) + " expects " + std::to_string(n - 1) +
                                     " fields, got " + std::to_string(t.size() - 1));
  }
}

}  // namespace

std::string format_record(const script::Record& r) {
  std::ostringstream os;
  os << script::keyword(r);
  std::visit(
      [&os](const auto& rec) {
        using T = std::decay_t<decltype(rec)>;
        if constexpr (std::is_same_v<T, script::Init>) {
          os << ' ' << rec.id;
          for (auto v : rec.genome) os << ' ' << v;
        } else if constexpr (std::is_same_v<T, script::Subpop>) {
          for (const auto& id : rec.ids) os << ' ' << id;
        } else if constexpr (std::is_same_v<T, script::Pair>) {
          os << ' ' << rec.parent << ' ' << rec.partner;
        } else if constexpr (std::is_same_v<T, script::Force>) {
          os << ' ' << rec.child << ' ' << gene_name(rec.gene) << ' ' << rec.value;
        } else if constexpr (std::is_same_v<T, script::MutBit>) {
          os << ' ' << rec.child << ' ' << gene_name(rec.gene) << ' ';
          if (rec.bit) os << *rec.bit; else os << '-';
        } else if constexpr (std::is_same_v<T, script::Thresh>) {
          os << ' ' << rec.child << ' ' << format_double(rec.value);
        } else {
          os << ' ' << rec.child;
        }
      },
      r);
  return os.str();
}

DecisionScript DecisionScript::parse(std::string_view text) {
  DecisionScript out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const auto t = tokenize(line);
    if (t.empty() || t[0].front() == '#') continue;
    const auto kw = t[0];
    if (kw == "INIT") {
      if (t.size() < 3) throw ScriptParseError(line_no, "INIT needs an id and a genome");
      script::Init rec{std::string(t[1]), {}};
      for (std::size_t i = 2; i < t.size(); ++i) {
        rec.genome.push_back(parse_number<std::int64_t>(t[i], line_no, "gene value"));
      }
      out.records.emplace_back(std::move(rec));
    } else if (kw == "SUBPOP") {
      if (t.size() < 2) throw ScriptParseError(line_no, "SUBPOP needs at least one id");
      script::Subpop rec;
      for (std::size_t i = 1; i < t.size(); ++i) rec.ids.emplace_back(t[i]);
      out.records.emplace_back(std::move(rec));
    } else if (kw == "PAIR") {
      expect_arity(t, 3, line_no);
      out.records.emplace_back(script::Pair{std::string(t[1]), std::string(t[2])});
    } else if (kw == "FORCE") {
      expect_arity(t, 4, line_no);
      out.records.emplace_back(script::Force{std::string(t[1]), parse_gene(t[2], line_no),
                                             parse_number<std::int64_t>(t[3], line_no, "value")});
    } else if (kw == "MUTBIT") {
      expect_arity(t, 4, line_no);
      std::optional<std::size_t> bit;
      if (t[3] != "-") bit = parse_number<std::size_t>(t[3], line_no, "bit index");
      out.records.emplace_back(script::MutBit{std::string(t[1]), parse_gene(t[2], line_no), bit});
    } else if (kw == "THRESH") {
      expect_arity(t, 3, line_no);
      const auto v = parse_number<double>(t[2], line_no, "threshold");
      if (!(v >= 0.0 && v <= 1.0)) throw ScriptParseError(line_no, "threshold outside [0, 1]");
      out.records.emplace_back(script::Thresh{std::string(t[1]), v});
    } else if (kw == "ACCEPT" || kw == "REJECT") {
      expect_arity(t, 2, line_no);
      out.records.emplace_back(script::Verdict{std::string(t[1]), kw == "ACCEPT"});
    } else {
      throw ScriptParseError(line_no, "unknown record '" + std::string(kw) + "'");
    }
  }
  return out;
}

std::string DecisionScript::serialize() const {
  std::string out;
  for (const auto& r : records) {
    out += format_record(r);
    out += '\n';
  }
  return out;
}

namespace {

[[noreturn]] void desync_at(const DecisionScript& script, std::size_t index,
                            std::string_view expectation) {
  std::string found = index < script.records.size()
                          ? "'" + format_record(script.records[index]) + "'"
                          : std::string("end of script");
  throw ReplayDesync(index, "expected " + std::string(expectation) + ", found " + found);
}

}  // namespace

void ScriptCursor::fail(std::string_view expectation) const { desync_at(*script_, pos_, expectation); }

void ScriptCursor::fail_consumed(std::string_view expectation) const {
  desync_at(*script_, pos_ == 0 ? 0 : pos_ - 1, expectation);
}

void ScriptCursor::expect_end() const {
  if (!at_end()) fail("end of script");
}

}  // namespace lpbsa
