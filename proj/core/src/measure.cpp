#include "braidwalk/measure.hpp"

#include <charconv>
#include <sstream>

#include "braidwalk/error.hpp"

namespace braidwalk {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Measure validate_measure(Measure m) {
  if (m.atoms.empty()) {
    throw ConfigError("measure has no atoms");
  }
  Rational total(0);
  for (auto& atom : m.atoms) {
    if (atom.word.strands() != m.strands) {
      throw StrandMismatch(m.strands, atom.word.strands());
    }
    atom.weight.canonicalize();
    if (atom.weight <= 0) {
      throw ConfigError("non-positive weight " + to_string(atom.weight));
    }
    if (atom.label.empty() && !atom.word.empty()) {
      atom.label = to_string(atom.word);
    }
    total += atom.weight;
  }
  if (total != 1) {
    throw ConfigError("weights sum to " + to_string(total) + ", not 1");
  }
  return m;
}

Measure parse_measure(std::string_view text) {
  Measure m;
  bool have_strands = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::string where = "measure line " + std::to_string(line_no) + ": ";
    if (!have_strands) {
      if (line.substr(0, 1) != "n") {
        throw ParseError(where + "expected n=<strands>");
      }
      auto rest = trim(line.substr(1));
      if (rest.empty() || rest.front() != '=') {
        throw ParseError(where + "expected n=<strands>");
      }
      rest = trim(rest.substr(1));
      int n = 0;
      const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || n < 2) {
        throw ParseError(where + "bad strand count");
      }
      m.strands = n;
      have_strands = true;
      continue;
    }
    const auto split = line.find_first_of(" \t");
    const auto weight_text = line.substr(0, split);
    const auto word_text =
        split == std::string_view::npos ? std::string_view{} : trim(line.substr(split));
    try {
      m.atoms.push_back(
          {parse_word_text(word_text, m.strands), parse_rational(weight_text), std::string(word_text)});
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  if (!have_strands) {
    throw ParseError("measure: missing n=<strands>");
  }
  return validate_measure(std::move(m));
}

std::string format_measure(const Measure& m) {
  std::ostringstream out;
  out << "n=" << m.strands << '\n';
  for (const auto& atom : m.atoms) {
    out << to_string(atom.weight);
    const std::string label = atom.label.empty() ? to_string(atom.word) : atom.label;
    if (!label.empty()) {
      out << ' ' << label;
    }
    out << '\n';
  }
  return out.str();
}

AtomSampler::AtomSampler(const Measure& m) {
  BigInt common = 1;
  for (const auto& atom : m.atoms) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), atom.weight.get_den_mpz_t());
  }
  if (mpz_sizeinbase(common.get_mpz_t(), 2) > 63) {
    throw ConfigError("measure weights need a common denominator below 2^63");
  }
  BigInt running = 0;
  for (const auto& atom : m.atoms) {
    running += atom.weight.get_num() * (common / atom.weight.get_den());
    cumulative_.push_back(running.get_ui());
  }
  total_ = common.get_ui();
}

std::size_t AtomSampler::draw(SplitMix64& rng) const {
  const std::uint64_t u = rng.below(total_);
  std::size_t lo = 0;
  std::size_t hi = cumulative_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (u < cumulative_[mid]) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace braidwalk
