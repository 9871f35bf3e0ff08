#include "twf/combin.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace twf {

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void gen_tuples(int lo, int n, int k, Tuple& cur, std::vector<Tuple>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    gen_tuples(v + 1, n, k, cur, out);
    cur.pop_back();
  }
}

std::map<std::pair<int, int>, std::vector<Tuple>> g_tuple_cache;
std::mutex g_tuple_mutex;

}  // namespace

const std::vector<Tuple>& increasing_tuples(int n, int k) {
  std::lock_guard<std::mutex> lock(g_tuple_mutex);
  auto key = std::make_pair(n, k);
  auto it = g_tuple_cache.find(key);
  if (it != g_tuple_cache.end()) return it->second;
  std::vector<Tuple> out;
  if (k >= 0 && k <= n) {
    Tuple cur;
    gen_tuples(1, n, k, cur, out);
  }
  return g_tuple_cache.emplace(key, std::move(out)).first->second;
}

std::vector<Tuple> subsets_of(const Tuple& ground, int k) {
  std::vector<Tuple> out;
  int n = static_cast<int>(ground.size());
  if (k < 0 || k > n) return out;
  for (const Tuple& idx : increasing_tuples(n, k)) {
    Tuple s;
    s.reserve(k);
    for (int i : idx) s.push_back(ground[i - 1]);
    out.push_back(std::move(s));
  }
  return out;
}

int tuple_rank(int n, const Tuple& t) {
  // Lexicographic rank among increasing |t|-tuples over {1..n}.
  int k = static_cast<int>(t.size());
  long rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < t[i]; ++v) rank += binom(n - v, k - i - 1);
    prev = t[i];
  }
  return static_cast<int>(rank);
}

bool tuple_contains(const Tuple& t, int x) {
  return std::binary_search(t.begin(), t.end(), x);
}

Tuple tuple_minus(const Tuple& a, const Tuple& b) {
  Tuple r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Tuple tuple_union(const Tuple& a, const Tuple& b) {
  Tuple r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool tuple_subset(const Tuple& a, const Tuple& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int insert_sign(const Tuple& t, int x, Tuple& out) {
  if (tuple_contains(t, x)) return 0;
  out.clear();
  out.reserve(t.size() + 1);
  int pos = 0;
  while (pos < static_cast<int>(t.size()) && t[pos] < x) ++pos;
  out.insert(out.end(), t.begin(), t.begin() + pos);
  out.push_back(x);
  out.insert(out.end(), t.begin() + pos, t.end());
  // dx^x moves right past the pos entries smaller than x.
  return (pos % 2 == 0) ? 1 : -1;
}

int merge_sign(const Tuple& a, const Tuple& b) {
  long inversions = 0;
  for (int x : a) {
    if (tuple_contains(b, x)) return 0;
    inversions += std::count_if(b.begin(), b.end(), [x](int y) { return y < x; });
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

Integer factorial(long n) {
  if (n < 0) return Integer(0);
  return Integer::factorial(static_cast<unsigned long>(n));
}

}  // namespace twf
