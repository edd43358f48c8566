#include "cfree/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfree {

namespace {

void check_size(int n, bool allow_large, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": negative n");
  if (n > kEnumerationCap && !allow_large)
    throw std::length_error(std::string(who) +
                            ": n exceeds the enumeration cap");
}

SetPartition relabeled(const SetPartition& tpl, int offset) {
  SetPartition out;
  out.n = tpl.n;
  out.blocks.reserve(tpl.blocks.size());
  for (const auto& b : tpl.blocks) {
    std::vector<int> nb;
    nb.reserve(b.size());
    for (int e : b) nb.push_back(e + offset);
    out.blocks.push_back(std::move(nb));
  }
  return out;
}

void canonicalize(SetPartition& p) {
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

// Non-crossing partitions of {1..size} for all sizes up to n, built by
// choosing the block of 1 and filling the gaps and the tail independently.
std::vector<std::vector<SetPartition>> nc_tables(int n) {
  std::vector<std::vector<SetPartition>> table(n + 1);
  table[0] = {SetPartition{0, {}}};
  for (int size = 1; size <= n; ++size) {
    std::vector<SetPartition> out;
    const uint32_t masks = 1u << (size - 1);
    for (uint32_t mask = 0; mask < masks; ++mask) {
      std::vector<int> first = {1};
      for (int k = 0; k < size - 1; ++k)
        if (mask & (1u << k)) first.push_back(k + 2);
      // Segments strictly between consecutive chosen points, then the tail.
      std::vector<std::pair<int, int>> segments;  // [lo, hi] inclusive
      for (size_t j = 0; j + 1 < first.size(); ++j)
        segments.emplace_back(first[j] + 1, first[j + 1] - 1);
      segments.emplace_back(first.back() + 1, size);

      std::vector<SetPartition> partial = {SetPartition{size, {first}}};
      for (auto [lo, hi] : segments) {
        const int len = hi - lo + 1;
        if (len <= 0) continue;
        std::vector<SetPartition> next;
        for (const auto& base : partial) {
          for (const auto& tpl : table[len]) {
            SetPartition ext = base;
            SetPartition seg = relabeled(tpl, lo - 1);
            for (auto& b : seg.blocks) ext.blocks.push_back(std::move(b));
            next.push_back(std::move(ext));
          }
        }
        partial = std::move(next);
      }
      for (auto& p : partial) out.push_back(std::move(p));
    }
    for (auto& p : out) canonicalize(p);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.blocks < b.blocks;
    });
    table[size] = std::move(out);
  }
  return table;
}

}  // namespace

int SetPartition::block_of(int element) const {
  for (int i = 0; i < block_count(); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), element))
      return i;
  throw std::out_of_range("SetPartition::block_of: element not covered");
}

std::vector<SetPartition> enumerate_all(int n, bool allow_large) {
  check_size(n, allow_large, "enumerate_all");
  std::vector<SetPartition> out;
  // Restricted growth strings.
  std::vector<int> rgs(n, 0);
  auto emit = [&] {
    SetPartition p;
    p.n = n;
    int classes = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    p.blocks.assign(classes, {});
    for (int i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i + 1);
    out.push_back(std::move(p));
  };
  if (n == 0) {
    out.push_back(SetPartition{0, {}});
    return out;
  }
  auto walk = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == n) {
      emit();
      return;
    }
    for (int c = 0; c <= max_used + 1; ++c) {
      rgs[pos] = c;
      self(self, pos + 1, std::max(max_used, c));
    }
  };
  walk(walk, 1, 0);  // rgs[0] = 0 fixed
  return out;
}

std::vector<SetPartition> enumerate_nc(int n, bool allow_large) {
  check_size(n, allow_large, "enumerate_nc");
  return nc_tables(n)[n];
}

std::vector<SetPartition> enumerate_interval(int n, bool allow_large) {
  check_size(n, allow_large, "enumerate_interval");
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back(SetPartition{0, {}});
    return out;
  }
  const uint32_t masks = 1u << (n - 1);
  for (uint32_t mask = 0; mask < masks; ++mask) {
    SetPartition p;
    p.n = n;
    std::vector<int> block = {1};
    for (int k = 2; k <= n; ++k) {
      if (mask & (1u << (k - 2))) {  // break before k
        p.blocks.push_back(block);
        block = {k};
      } else {
        block.push_back(k);
      }
    }
    p.blocks.push_back(block);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.blocks < b.blocks; });
  return out;
}

std::vector<SetPartition> enumerate_nc_prime(int n, bool allow_large) {
  if (n < 1)
    throw std::invalid_argument("enumerate_nc_prime: needs n >= 1");
  auto all = enumerate_nc(n, allow_large);
  std::vector<SetPartition> out;
  for (auto& p : all) {
    const int b1 = p.block_of(1);
    if (std::binary_search(p.blocks[b1].begin(), p.blocks[b1].end(), n))
      out.push_back(std::move(p));
  }
  return out;
}

bool is_noncrossing(const SetPartition& p) {
  // A crossing is a1 < b1 < a2 < b2 with a's and b's in different blocks.
  const int m = p.block_count();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& a = p.blocks[i];
      const auto& b = p.blocks[j];
      for (size_t s = 0; s + 1 < a.size(); ++s) {
        for (int e : b) {
          if (a[s] < e && e < a[s + 1]) {
            // b has an element inside a gap of a; it crosses iff b also
            // has one outside [a[s], a[s+1]].
            if (b.front() < a[s] || b.back() > a[s + 1]) return false;
          }
        }
      }
    }
  }
  return true;
}

BlockClasses classify_blocks(const SetPartition& p) {
  if (!is_noncrossing(p))
    throw std::invalid_argument("classify_blocks: partition has a crossing");
  BlockClasses out;
  for (int i = 0; i < p.block_count(); ++i) {
    const int lo = p.blocks[i].front();
    const int hi = p.blocks[i].back();
    bool inner = false;
    for (int j = 0; j < p.block_count() && !inner; ++j) {
      if (j == i) continue;
      if (p.blocks[j].front() < lo && hi < p.blocks[j].back()) inner = true;
    }
    (inner ? out.inner : out.outer).push_back(i);
  }
  return out;
}

std::vector<int> singleton_blocks(const SetPartition& p) {
  std::vector<int> out;
  for (int i = 0; i < p.block_count(); ++i)
    if (p.blocks[i].size() == 1) out.push_back(i);
  return out;
}

bool is_ll(const SetPartition& p, const SetPartition& s) {
  if (p.n != s.n) throw std::invalid_argument("is_ll: ground-set mismatch");
  std::vector<int> pb(p.n + 1), sb(s.n + 1);
  for (int i = 0; i < p.block_count(); ++i)
    for (int e : p.blocks[i]) pb[e] = i;
  for (int i = 0; i < s.block_count(); ++i)
    for (int e : s.blocks[i]) sb[e] = i;
  // Refinement: every block of p sits inside one block of s.
  for (const auto& b : p.blocks)
    for (int e : b)
      if (sb[e] != sb[b.front()]) return false;
  // Endpoint condition on each block of s.
  for (const auto& b : s.blocks)
    if (pb[b.front()] != pb[b.back()]) return false;
  return true;
}

}  // namespace cfree
