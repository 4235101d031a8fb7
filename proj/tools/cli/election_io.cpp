#include "election_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "kdiv/errors.hpp"

namespace kdiv::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-comment line; false at end of input.
  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      const auto end = text_.find('\n', pos_);
      line = text_.substr(pos_, end == std::string_view::npos ? std::string_view::npos : end - pos_);
      pos_ = end == std::string_view::npos ? text_.size() : end + 1;
      ++number_;
      line = trim(line);
      if (number_ > 1 && (line.empty() || line.front() == '#')) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("election file line " + std::to_string(number_) + ": " + what);
  }

  int number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int number_ = 0;
};

std::pair<std::string_view, std::string_view> split_key(const LineReader& in, std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) in.fail("expected 'key: value'");
  return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

std::int64_t parse_int(const LineReader& in, std::string_view token) {
  if (token.empty()) in.fail("expected an integer");
  std::int64_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') in.fail("expected an integer, got '" + std::string(token) + "'");
    if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) in.fail("integer out of range");
    value = value * 10 + (c - '0');
  }
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find(sep, start);
    auto tok = trim(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (!tok.empty()) out.push_back(tok);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<Candidate> parse_candidates(const LineReader& in, std::string_view s, char sep, int m) {
  std::vector<Candidate> out;
  for (auto tok : split_tokens(s, sep)) {
    const auto c = parse_int(in, tok);
    if (c < 1 || c > m) in.fail("candidate " + std::string(tok) + " out of range 1.." + std::to_string(m));
    out.push_back(static_cast<Candidate>(c - 1));
  }
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Election parse_election(std::string_view text) {
  LineReader in(text);
  std::string_view line;
  if (!in.next(line) || line != "# kdiv election") in.fail("missing '# kdiv election' header");

  auto expect = [&](std::string_view key) {
    if (!in.next(line)) in.fail("unexpected end of file, expected '" + std::string(key) + ":'");
    auto [k, v] = split_key(in, line);
    if (k != key) in.fail("expected '" + std::string(key) + ":', got '" + std::string(k) + ":'");
    return v;
  };

  const auto m64 = parse_int(in, expect("m"));
  if (m64 < 1 || m64 > 100000) in.fail("m out of range");
  const int m = static_cast<int>(m64);
  const auto n = parse_int(in, expect("n"));

  Certificate cert;
  std::optional<std::vector<std::int64_t>> sc_lines;
  std::int64_t vote_lines = -1;
  while (vote_lines < 0) {
    if (!in.next(line)) in.fail("unexpected end of file, expected 'votes:'");
    auto [key, value] = split_key(in, line);
    if (key == "axis") {
      try {
        cert.axis = Ranking(parse_candidates(in, value, ' ', m));
      } catch (const InputError& err) {
        in.fail(std::string("invalid axis: ") + err.what());
      }
    } else if (key == "tree") {
      try {
        cert.tree = GSTree::parse(value, true);
      } catch (const InputError& err) {
        in.fail(std::string("invalid tree: ") + err.what());
      }
    } else if (key == "sc-order") {
      std::vector<std::int64_t> order;
      for (auto tok : split_tokens(value, ' ')) order.push_back(parse_int(in, tok));
      sc_lines = std::move(order);
    } else if (key == "embedding") {
      const auto d = parse_int(in, value);
      if (d < 1 || d > 64) in.fail("embedding dimension out of range");
      std::vector<std::vector<double>> points;
      for (int c = 0; c < m; ++c) {
        auto coords = expect("point");
        std::vector<double> p;
        for (auto tok : split_tokens(coords, ' ')) {
          std::string s(tok);
          char* end = nullptr;
          const double x = std::strtod(s.c_str(), &end);
          if (end != s.c_str() + s.size()) in.fail("invalid coordinate '" + s + "'");
          p.push_back(x);
        }
        if (static_cast<std::int64_t>(p.size()) != d) in.fail("point has the wrong dimension");
        points.push_back(std::move(p));
      }
      cert.embedding = Embedding(std::move(points));
    } else if (key == "votes") {
      vote_lines = parse_int(in, value);
    } else {
      in.fail("unknown header '" + std::string(key) + "'");
    }
  }

  std::vector<Vote> votes;
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < vote_lines; ++i) {
    if (!in.next(line)) in.fail("expected " + std::to_string(vote_lines) + " vote lines");
    auto [mult, order] = split_key(in, line);
    const auto count = parse_int(in, mult);
    if (count < 1) in.fail("multiplicity must be at least 1");
    auto cands = parse_candidates(in, order, '>', m);
    try {
      votes.push_back({Ranking(std::move(cands)), count});
    } catch (const InputError& err) {
      in.fail(err.what());
    }
    total += count;
  }
  if (in.next(line)) in.fail("trailing content after the last vote");
  if (total != n) throw InputError("election file: header says n=" + std::to_string(n) + " but votes sum to " + std::to_string(total));
  if (sc_lines) {
    std::vector<int> order;
    for (auto idx : *sc_lines) {
      if (idx < 1 || idx > vote_lines) throw InputError("election file: sc-order index out of range");
      order.push_back(static_cast<int>(idx - 1));
    }
    cert.sc_order = std::move(order);
  }
  return Election(m, std::move(votes), std::move(cert));
}

std::string serialize_election(const Election& e) {
  std::ostringstream out;
  const int m = e.candidate_count();
  out << "# kdiv election\n";
  out << "m: " << m << "\n";
  out << "n: " << e.voter_count() << "\n";
  const auto& cert = e.certificate();
  if (cert.axis) {
    out << "axis:";
    for (Candidate c : *cert.axis) out << ' ' << c + 1;
    out << "\n";
  }
  if (cert.tree) out << "tree: " << cert.tree->to_string(true) << "\n";
  if (cert.sc_order) {
    out << "sc-order:";
    for (int idx : *cert.sc_order) out << ' ' << idx + 1;
    out << "\n";
  }
  if (cert.embedding) {
    out << "embedding: " << cert.embedding->dimension() << "\n";
    for (const auto& p : cert.embedding->points()) {
      out << "point:";
      for (double x : p) out << ' ' << format_double(x);
      out << "\n";
    }
  }
  out << "votes: " << e.votes().size() << "\n";
  for (const auto& v : e.votes()) {
    out << v.multiplicity << ":";
    for (int i = 0; i < m; ++i) out << (i ? " > " : " ") << v.ranking[i] + 1;
    out << "\n";
  }
  return out.str();
}

Election read_election(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_election(buf.str());
}

void write_text(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

void write_election(const std::filesystem::path& path, const Election& e) { write_text(path, serialize_election(e)); }

}  // namespace kdiv::cli
