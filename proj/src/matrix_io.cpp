#include "pcw/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace pcw {

namespace {

struct Token {
  long long value = 0;
  int line = 0;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    while (ls >> word) {
      try {
        std::size_t pos = 0;
        const long long v = std::stoll(word, &pos);
        if (pos != word.size()) throw std::invalid_argument(word);
        tokens.push_back(Token{v, lineno});
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) +
                         ": `" + word + "` is not an integer");
      }
    }
  }
  return tokens;
}

}  // namespace

ParityCheckMatrix parse_matrix_text(std::istream& in) {
  const std::vector<Token> tokens = tokenize(in);
  if (tokens.size() < 3) {
    throw InputError("missing header: expected `n m q` on the first line");
  }
  const long long n = tokens[0].value;
  const long long m = tokens[1].value;
  const long long q = tokens[2].value;
  if (n < 1 || m < 1) {
    throw InputError("line " + std::to_string(tokens[0].line) +
                     ": dimensions must be >= 1");
  }
  if (q < 2) {
    throw InputError("line " + std::to_string(tokens[2].line) +
                     ": modulus q must be >= 2");
  }
  const std::size_t expect = static_cast<std::size_t>(m * n);
  if (tokens.size() - 3 < expect) {
    const int last = tokens.empty() ? 0 : tokens.back().line;
    throw InputError("expected " + std::to_string(m) + " rows of " +
                     std::to_string(n) + " entries, found only " +
                     std::to_string(tokens.size() - 3) +
                     " entries (line " + std::to_string(last) + ")");
  }
  if (tokens.size() - 3 > expect) {
    throw InputError("line " + std::to_string(tokens[3 + expect].line) +
                     ": trailing data after " + std::to_string(m) +
                     " rows of " + std::to_string(n) + " entries");
  }
  std::vector<Symbol> entries;
  entries.reserve(expect);
  for (std::size_t t = 3; t < tokens.size(); ++t) {
    const long long v = tokens[t].value;
    if (v < 0 || v >= q) {
      throw InputError("line " + std::to_string(tokens[t].line) + ": entry " +
                       std::to_string(v) + " outside [0, " +
                       std::to_string(q) + ")");
    }
    entries.push_back(static_cast<Symbol>(v));
  }
  return ParityCheckMatrix::make(static_cast<int>(m), static_cast<int>(n),
                                 static_cast<std::uint32_t>(q),
                                 std::move(entries));
}

ParityCheckMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file: " + path);
  try {
    return parse_matrix_text(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string matrix_to_text(const ParityCheckMatrix& H) {
  std::ostringstream out;
  out << H.n << " " << H.m << " " << H.q << "\n";
  for (int j = 0; j < H.m; ++j) {
    for (int i = 0; i < H.n; ++i) {
      if (i) out << " ";
      out << H.at(j, i);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pcw
