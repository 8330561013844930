#include "core/sequence.hpp"

#include <sstream>

#include "core/error.hpp"

namespace spectralign {

char to_char(Nucleotide n) {
  switch (n) {
    case Nucleotide::A:
      return 'A';
    case Nucleotide::C:
      return 'C';
    case Nucleotide::G:
      return 'G';
    case Nucleotide::T:
      return 'T';
  }
  return '?';
}

std::optional<Nucleotide> nucleotide_from_char(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return Nucleotide::A;
    case 'C':
    case 'c':
      return Nucleotide::C;
    case 'G':
    case 'g':
      return Nucleotide::G;
    case 'T':
    case 't':
      return Nucleotide::T;
    default:
      return std::nullopt;
  }
}

Sequence Sequence::parse(std::string_view text) {
  if (text.size() > kMaxLength) {
    std::ostringstream msg;
    msg << "sequence length " << text.size() << " exceeds limit " << kMaxLength;
    throw Error(ErrorKind::TooLong, msg.str());
  }
  std::vector<Nucleotide> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto n = nucleotide_from_char(text[i]);
    if (!n) {
      std::ostringstream msg;
      msg << "invalid symbol '" << text[i] << "' at index " << i;
      throw Error(ErrorKind::BadSequence, msg.str());
    }
    symbols.push_back(*n);
  }
  return Sequence(std::move(symbols));
}

Sequence Sequence::from_symbols(std::vector<Nucleotide> symbols) {
  if (symbols.size() > kMaxLength) {
    std::ostringstream msg;
    msg << "sequence length " << symbols.size() << " exceeds limit "
        << kMaxLength;
    throw Error(ErrorKind::TooLong, msg.str());
  }
  return Sequence(std::move(symbols));
}

std::string Sequence::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Nucleotide n : symbols_) out.push_back(to_char(n));
  return out;
}

}  // namespace spectralign
