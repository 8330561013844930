#include "core/codec.hpp"

#include <charconv>
#include <sstream>
#include <string>

#include "core/error.hpp"

namespace spectralign {

Nucleotide encode_power(double power) {
  if (!(power >= 0.0 && power <= 4.0)) {
    std::ostringstream msg;
    msg << "power " << power << " out of range [0, 4]";
    throw Error(ErrorKind::PowerRange, msg.str());
  }
  if (power <= 1.0) return Nucleotide::A;
  if (power <= 2.0) return Nucleotide::C;
  if (power <= 3.0) return Nucleotide::G;
  return Nucleotide::T;
}

Sequence encode_snapshot(const std::vector<double>& powers) {
  if (powers.empty())
    throw Error(ErrorKind::InvalidArgument, "empty power list");
  std::vector<Nucleotide> symbols;
  symbols.reserve(powers.size());
  for (std::size_t i = 0; i < powers.size(); ++i) {
    try {
      symbols.push_back(encode_power(powers[i]));
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "channel " << (i + 1) << ": " << e.what();
      throw Error(e.kind(), msg.str());
    }
  }
  return Sequence::from_symbols(std::move(symbols));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<double> parse_power_csv(std::string_view text) {
  if (trim(text).empty())
    throw Error(ErrorKind::InvalidArgument, "empty power list");

  std::vector<double> powers;
  std::size_t pos = 0;
  std::size_t index = 1;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view raw =
        comma == std::string_view::npos
            ? text.substr(pos)
            : text.substr(pos, comma - pos);
    const std::string_view token = trim(raw);

    double value = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [end, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || end != last) {
      std::ostringstream msg;
      msg << "invalid power value '" << std::string(token) << "' at position "
          << index;
      throw Error(ErrorKind::InvalidArgument, msg.str());
    }
    powers.push_back(value);

    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    ++index;
  }
  return powers;
}

}  // namespace spectralign
