#include "rng.hpp"

namespace tmm {

BraidWord random_braid(Rng& rng, int n, int max_len) {
  std::vector<int> letters;
  if (n < 2) return BraidWord(n);
  const int len = rng.between(1, max_len);
  for (int k = 0; k < len; ++k) {
    const int i = rng.between(1, n - 1);
    letters.push_back(rng.below(2) ? i : -i);
  }
  return BraidWord::from_letters(n, letters);
}

BraidWord random_pure_braid(Rng& rng, int n, int max_letters) {
  PureBraidWord w{n, {}};
  if (n < 2) return BraidWord(n);
  const int len = rng.between(1, max_letters);
  for (int k = 0; k < len; ++k) {
    const int i = rng.between(1, n - 1);
    const int j = rng.between(i + 1, n);
    w.letters.push_back({{i, j}, rng.below(2) ? 1 : -1});
  }
  return w.to_braid();
}

}  // namespace tmm
