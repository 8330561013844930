#include "core/simulate.hpp"

#include <charconv>
#include <sstream>

#include "core/codec.hpp"
#include "core/error.hpp"

namespace spectralign {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw Error(ErrorKind::BadScenario, msg.str());
}

std::int64_t parse_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [end, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || end != last)
    fail(line, "invalid integer '" + std::string(token) + "'");
  return value;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario scenario;
  bool seen_su = false;
  bool seen_name = false;
  bool seen_match = false;
  bool seen_mismatch = false;
  bool seen_gap = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      fail(line_no, "expected 'directive: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));

    try {
      if (key == "su") {
        if (seen_su) fail(line_no, "duplicate su directive");
        scenario.su_demand = Sequence::parse(value);
        if (scenario.su_demand.empty()) fail(line_no, "empty su sequence");
        seen_su = true;
      } else if (key == "pu") {
        if (value.empty()) fail(line_no, "empty pu value");
        scenario.steps.emplace_back(Sequence::parse(value));
      } else if (key == "pu_power") {
        scenario.steps.emplace_back(parse_power_csv(value));
      } else if (key == "match") {
        if (seen_match) fail(line_no, "duplicate match directive");
        scenario.scoring.match = parse_int(value, line_no);
        seen_match = true;
      } else if (key == "mismatch") {
        if (seen_mismatch) fail(line_no, "duplicate mismatch directive");
        scenario.scoring.mismatch = parse_int(value, line_no);
        seen_mismatch = true;
      } else if (key == "gap") {
        if (seen_gap) fail(line_no, "duplicate gap directive");
        scenario.scoring.gap = parse_int(value, line_no);
        seen_gap = true;
      } else if (key == "name") {
        if (seen_name) fail(line_no, "duplicate name directive");
        if (value.empty()) fail(line_no, "empty name");
        scenario.name = std::string(value);
        seen_name = true;
      } else {
        fail(line_no, "unknown directive '" + std::string(key) + "'");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::BadScenario) throw;
      fail(line_no, e.what());
    }
  }

  if (!seen_su)
    throw Error(ErrorKind::BadScenario, "missing su line");
  if (scenario.steps.empty())
    throw Error(ErrorKind::BadScenario, "no pu steps");
  return scenario;
}

std::vector<StepRecord> run(const Scenario& scenario) {
  std::vector<StepRecord> records;
  records.reserve(scenario.steps.size());

  // All users start out waiting.
  AllocationResult previous;
  previous.assignments.assign(scenario.su_demand.size(), std::nullopt);

  for (std::size_t step = 0; step < scenario.steps.size(); ++step) {
    try {
      const Sequence pu =
          std::holds_alternative<Sequence>(scenario.steps[step])
              ? std::get<Sequence>(scenario.steps[step])
              : encode_snapshot(
                    std::get<std::vector<double>>(scenario.steps[step]));

      AllocationResult result =
          allocate(pu, scenario.su_demand, scenario.scoring);
      const ReallocationDiff churn = diff(previous, result);

      StepRecord record;
      record.step = step;
      record.pu_sequence = pu;
      record.idle_count = result.idle.size();
      record.allocated_count = result.allocated_count();
      record.waiting_count =
          scenario.su_demand.size() - record.allocated_count;
      record.moved = churn.moved;
      record.evicted = churn.evicted;
      record.admitted = churn.admitted;
      record.alignment_score = result.score;
      record.assignments = result.assignments;
      records.push_back(std::move(record));

      previous = std::move(result);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "step " << step << ": " << e.what();
      throw Error(e.kind(), msg.str());
    }
  }
  return records;
}

std::string emit_csv(const std::vector<StepRecord>& records) {
  std::ostringstream out;
  out << "step,pu_sequence,idle_count,allocated_count,waiting_count,"
         "moved_count,evicted_count,admitted_count,alignment_score\n";
  for (const auto& r : records) {
    out << r.step << ',' << r.pu_sequence.str() << ',' << r.idle_count << ','
        << r.allocated_count << ',' << r.waiting_count << ',' << r.moved << ','
        << r.evicted << ',' << r.admitted << ',' << r.alignment_score << '\n';
  }
  return out.str();
}

std::string emit_text(const std::vector<StepRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    out << "step " << r.step << ": pu=" << r.pu_sequence.str() << " idle={";
    const std::vector<int> idle = idle_channels(r.pu_sequence);
    for (std::size_t i = 0; i < idle.size(); ++i)
      out << (i ? "," : "") << idle[i];
    out << "} score=" << r.alignment_score << '\n';

    // Spectrum row plus a marker row flagging idle channels; both use
    // two-character cells so the markers line up for any channel count.
    out << "  pu:   ";
    for (std::size_t i = 0; i < r.pu_sequence.size(); ++i)
      out << (i ? " " : "") << to_char(r.pu_sequence[i]);
    out << '\n';
    std::string markers(8 + 2 * r.pu_sequence.size(), ' ');
    for (int channel : idle) markers[8 + 2 * (channel - 1)] = '^';
    markers.replace(0, 8, "  idle: ");
    while (!markers.empty() && markers.back() == ' ') markers.pop_back();
    out << markers << '\n';

    for (std::size_t i = 0; i < r.assignments.size(); ++i) {
      out << "    SU" << (i + 1) << " -> ";
      if (r.assignments[i])
        out << "channel " << *r.assignments[i];
      else
        out << "waiting";
      out << '\n';
    }
    out << "  " << r.allocated_count << " allocated, " << r.waiting_count
        << " waiting\n";
    out << "  churn: moved " << r.moved << ", evicted " << r.evicted
        << ", admitted " << r.admitted << '\n';
    out << '\n';
  }
  return out.str();
}

}  // namespace spectralign
