#include "glrestrict/signature.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <stdexcept>

namespace glr {

namespace {

bool decreasing(const std::vector<long>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

}  // namespace

Signature::Signature(std::vector<long> entries) : entries_(std::move(entries)) {
  if (!decreasing(entries_)) throw std::invalid_argument("signature entries must be weakly decreasing");
}

std::optional<Signature> Signature::try_make(std::vector<long> entries) {
  if (!decreasing(entries)) return std::nullopt;
  return Signature(std::move(entries));
}

Signature Signature::parse(std::string_view text) {
  std::vector<long> out;
  if (text.empty()) throw std::invalid_argument("empty signature");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    long value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw std::invalid_argument("bad signature entry '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Signature(std::move(out));
}

Signature Signature::dual() const {
  std::vector<long> out(entries_.rbegin(), entries_.rend());
  for (auto& x : out) x = -x;
  return Signature(std::move(out));
}

std::vector<long> Signature::shifted(std::size_t j, long delta) const {
  std::vector<long> out = entries_;
  out.at(j - 1) += delta;
  return out;
}

std::string Signature::to_string() const { return "(" + to_csv() + ")"; }

std::string Signature::to_csv() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s;
}

bool interlaces(const Signature& r, const std::vector<long>& q) {
  if (r.size() != q.size() + 1) return false;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (!(r.entries()[j] >= q[j] && q[j] >= r.entries()[j + 1])) return false;
  }
  return true;
}

bool interlaces(const Signature& r, const Signature& q) { return interlaces(r, q.entries()); }

std::vector<Signature> enumerate_interlacing(const Signature& r) {
  std::vector<Signature> out;
  if (r.size() == 0) return out;
  const std::size_t n = r.size() - 1;
  std::vector<long> q(n);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      out.emplace_back(q);
      return;
    }
    for (long v = r.entries()[j]; v >= r.entries()[j + 1]; --v) {
      q[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t count_gt_patterns(const Signature& p) {
  static std::mutex mutex;
  static std::map<std::vector<long>, std::uint64_t> memo;
  if (p.size() <= 1) return 1;
  // Counts only depend on differences; normalize so the cache stays small.
  std::vector<long> key = p.entries();
  const long last = key.back();
  for (auto& x : key) x -= last;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::uint64_t total = 0;
  for (const auto& q : enumerate_interlacing(p)) total += count_gt_patterns(q);
  std::lock_guard<std::mutex> lock(mutex);
  memo.emplace(std::move(key), total);
  return total;
}

std::vector<Signature> signatures_in_box(int n, long lo, long hi) {
  std::vector<Signature> out;
  std::vector<long> p(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int j, long upper) -> void {
    if (j == n) {
      out.emplace_back(p);
      return;
    }
    for (long v = upper; v >= lo; --v) {
      p[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, v);
    }
  };
  rec(rec, 0, hi);
  return out;
}

}  // namespace glr
