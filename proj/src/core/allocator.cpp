#include "core/allocator.hpp"

#include <sstream>

#include "core/error.hpp"

namespace spectralign {

std::vector<int> idle_channels(const Sequence& pu_seq) {
  std::vector<int> idle;
  for (std::size_t i = 0; i < pu_seq.size(); ++i)
    if (pu_seq[i] == Nucleotide::A) idle.push_back(static_cast<int>(i) + 1);
  return idle;
}

AllocationResult allocate(const Sequence& pu_seq, const Sequence& su_seq,
                          const Scoring& scoring) {
  if (pu_seq.empty())
    throw Error(ErrorKind::BadSequence, "pu sequence is empty");
  if (su_seq.empty())
    throw Error(ErrorKind::BadSequence, "su sequence is empty");

  const Alignment al = align(pu_seq, su_seq, scoring);

  AllocationResult result;
  result.assignments.assign(su_seq.size(), std::nullopt);
  result.score = al.score;
  result.idle = idle_channels(pu_seq);

  int channel = 0;  // position within pu_seq of the last consumed symbol
  int user = 0;     // position within su_seq of the last consumed symbol
  for (const auto& col : al.columns) {
    if (col.top) ++channel;
    if (col.bottom) ++user;
    if (col.top && col.bottom && *col.top == Nucleotide::A)
      result.assignments[static_cast<std::size_t>(user) - 1] = channel;
  }
  return result;
}

ReallocationDiff diff(const AllocationResult& prev,
                      const AllocationResult& next) {
  if (prev.assignments.size() != next.assignments.size()) {
    std::ostringstream msg;
    msg << "user count mismatch: " << prev.assignments.size() << " vs "
        << next.assignments.size();
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }

  ReallocationDiff d;
  d.transitions.reserve(prev.assignments.size());
  for (std::size_t i = 0; i < prev.assignments.size(); ++i) {
    const auto& before = prev.assignments[i];
    const auto& after = next.assignments[i];
    Transition t;
    if (before && after)
      t = (*before == *after) ? Transition::Stable : Transition::Moved;
    else if (before)
      t = Transition::Evicted;
    else if (after)
      t = Transition::Admitted;
    else
      t = Transition::StillWaiting;

    switch (t) {
      case Transition::Stable:
        ++d.stable;
        break;
      case Transition::Moved:
        ++d.moved;
        break;
      case Transition::Evicted:
        ++d.evicted;
        break;
      case Transition::Admitted:
        ++d.admitted;
        break;
      case Transition::StillWaiting:
        break;
    }
    d.transitions.push_back(t);
  }
  return d;
}

}  // namespace spectralign
