#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace genarr {

Partition Partition::normalized(std::vector<int> values) {
  for (int v : values) {
    if (v < 0) throw UsageError("partition parts must be nonnegative");
  }
  std::sort(values.begin(), values.end(), std::greater<int>());
  while (!values.empty() && values.back() == 0) values.pop_back();
  Partition p;
  p.parts_ = std::move(values);
  p.weight_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0);
  return p;
}

Partition::Partition(std::vector<int> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw UsageError("partition parts must be weakly decreasing");
    }
  }
  parts_ = std::move(parts);
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int s) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), s));
}

BigInt Partition::stabilizer_order() const {
  BigInt r(1);
  size_t i = 0;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    r *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return r;
}

namespace {
std::string render(const std::vector<int>& parts, bool latex) {
  std::ostringstream out;
  out << '(';
  size_t i = 0;
  bool first = true;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!first) out << ' ';
    first = false;
    out << parts[i];
    size_t run = j - i;
    if (run > 1) {
      if (latex) {
        out << "^{" << run << '}';
      } else {
        out << '^' << run;
      }
    }
    i = j;
  }
  out << ')';
  return out.str();
}
}  // namespace

std::string Partition::to_string() const { return render(parts_, false); }
std::string Partition::latex_label() const { return render(parts_, true); }

namespace {
void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(acc.empty() ? Partition() : Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw UsageError("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(d, d == 0 ? 1 : d, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int d) {
  std::vector<Partition> out;
  for (int i = 0; i <= d; ++i) {
    auto w = partitions_of(i);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace genarr
