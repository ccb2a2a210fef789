// Small tour of the library: RSK and back, rectification, one LR coefficient.
#include <iostream>

#include "superrsk/superrsk.hpp"

using namespace superrsk;

int main() {
  auto a = SignedAlphabet::standard(1, 2);
  auto w = Biword::from_names(a, a, {"-1", "-1", "1", "2", "2"}, {"-1", "2", "1", "1", "-1"});
  auto p = rsk(w);
  std::cout << "biword\n" << render(w) << "T\n" << render(p.insertion) << "Q\n" << render(p.recording);
  if (rsk_inverse(p) != w) return 1;

  auto s = parse_skew_text(a, ". . 2/. 1/-1 1");
  require_valid(s);
  std::cout << "skew\n" << render(s) << "rectified\n" << render(rectify(s));

  auto b = SignedAlphabet::standard(2, 2);
  LRQuery q{Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1}), b};
  std::cout << "c = " << lr_product(q).coefficient << " " << lr_skew_rect(q).coefficient << " "
            << lr_yamanouchi(q).coefficient << "\n";
}
