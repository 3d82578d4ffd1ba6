#include "pipeline/exports.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "common.hpp"

namespace a2ck::pipeline {

namespace {

const char* kind_name(Alphabet::Kind k) {
  return k == Alphabet::Kind::tile ? "tile" : "hexagon";
}

std::string checksum_line(const std::string& payload) {
  std::ostringstream os;
  os << "# checksum fnv1a64=" << std::hex << std::setw(16) << std::setfill('0')
     << fnv1a64(payload);
  return os.str();
}

std::string header(const std::string& what, const std::string& name, const Alphabet& a) {
  std::ostringstream os;
  os << "a2ck" << what << " 1 name=" << name << " kind=" << kind_name(a.kind) << " q=" << a.q
     << " n=" << a.size() << " blocks=";
  for (int t = 0; t < 3; ++t)
    os << (t ? "," : "") << (a.blocks[t].second - a.blocks[t].first);
  return os.str();
}

}  // namespace

void write_alphabet(std::ostream& out, const Alphabet& a, const group::SymbolTable& syms) {
  std::string payload;
  for (std::uint32_t i = 0; i < a.size(); ++i)
    payload += std::to_string(a.keys[i].type) + " " + a.keys[i].str(syms) + "\n";
  out << header("alphabet", kind_name(a.kind), a) << "\n"
      << payload << checksum_line(payload) << "\n";
}

void write_matrix(std::ostream& out, const std::string& name, const ZeroOneMatrix& m,
                  const Alphabet& a, const group::SymbolTable& syms) {
  if (m.n != a.size()) throw Error(Errc::invalid_argument, "matrix/alphabet size mismatch");
  std::string payload;
  // keys are sorted, so (row, col) index order is already sorted key order
  for (std::uint32_t r = 0; r < m.n; ++r)
    for (std::uint32_t c = 0; c < m.n; ++c)
      if (m.at(r, c)) payload += a.keys[r].str(syms) + "\t" + a.keys[c].str(syms) + "\t1\n";
  out << header("matrix", name, a) << "\n" << payload << checksum_line(payload) << "\n";
}

AlphabetFile read_alphabet(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("a2ckalphabet 1 ", 0) != 0)
    throw Error(Errc::parse, "alphabet file: bad header");
  AlphabetFile f;
  std::istringstream hs(line.substr(std::string("a2ckalphabet 1 ").size()));
  std::string kv;
  while (hs >> kv) {
    const auto eq = kv.find('=');
    const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "kind") f.kind = val;
    if (key == "q") f.q = std::stoi(val);
    if (key == "blocks") {
      std::istringstream bs(val);
      std::string tok;
      for (int t = 0; t < 3 && std::getline(bs, tok, ','); ++t)
        f.block_sizes[t] = static_cast<std::uint32_t>(std::stoul(tok));
    }
  }
  std::string payload;
  while (std::getline(in, line)) {
    if (line.rfind("# checksum fnv1a64=", 0) == 0) {
      if (checksum_line(payload) != line)
        throw Error(Errc::parse, "alphabet file: checksum mismatch");
      return f;
    }
    payload += line + "\n";
    const auto sp = line.find(' ');
    if (sp == std::string::npos) throw Error(Errc::parse, "alphabet file: bad key line");
    f.keys.emplace_back(std::stoi(line.substr(0, sp)), line.substr(sp + 1));
  }
  throw Error(Errc::parse, "alphabet file: missing checksum line");
}

ZeroOneMatrix read_matrix(std::istream& in, const Alphabet& a) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("a2ckmatrix 1 ", 0) != 0)
    throw Error(Errc::parse, "matrix file: bad header");
  ZeroOneMatrix m(a.size());
  std::string payload;
  while (std::getline(in, line)) {
    if (line.rfind("# checksum fnv1a64=", 0) == 0) {
      if (checksum_line(payload) != line)
        throw Error(Errc::parse, "matrix file: checksum mismatch");
      return m;
    }
    payload += line + "\n";
    const auto tab1 = line.find('\t');
    const auto tab2 = line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      throw Error(Errc::parse, "matrix file: bad triplet line");
    const std::string rkey = line.substr(0, tab1);
    const std::string ckey = line.substr(tab1 + 1, tab2 - tab1 - 1);
    auto ri = a.index.find(rkey);
    auto ci = a.index.find(ckey);
    if (ri == a.index.end() || ci == a.index.end())
      throw Error(Errc::parse, "matrix file: key not in alphabet: " + rkey);
    m.at(ri->second, ci->second) = 1;
  }
  throw Error(Errc::parse, "matrix file: missing checksum line");
}

}  // namespace a2ck::pipeline
