// Prints the Jordan structure of the formal Frechet derivative of f at W,
// predicted and brute-forced, for a few polynomials.
//
//   frechet_demo            built-in list
//   frechet_demo f size     f as "c0,c1,..." at W = J_size(0)

#include <iostream>
#include <string>
#include <vector>

#include "jkron/io.hpp"
#include "jkron/oracle.hpp"
#include "jkron/predict_frechet.hpp"

using namespace jkron;

static void show(const std::string& coeffs, const JordanSpec& w) {
  const UnivariatePoly f = parse_univariate(coeffs);
  const JordanStructure predicted = frechet_jcf(f, w, w);
  const JordanStructure oracle = oracle_jcf(bezout_quotient(f), w, w);
  std::cout << "f = " << coeffs << "  W = " << to_json(w).dump() << '\n'
            << "  predicted " << to_json(predicted).dump() << '\n'
            << "  oracle    " << to_json(oracle).dump() << (predicted == oracle ? "" : "  MISMATCH") << '\n';
}

int main(int argc, char** argv) {
  try {
    if (argc == 3) {
      show(argv[1], JordanSpec{{Rational(0), std::stoul(argv[2])}});
      return 0;
    }
    show("0,0,1", JordanSpec{{Rational(0), 2}});
    show("0,0,0,0,0,1", JordanSpec{{Rational(0), 4}});
    show("0,0,-6,0,1", JordanSpec{{Rational(1), 3}, {Rational(1), 2}});
    show("0,0,-2,0,1", JordanSpec{{Rational(-1), 4}, {Rational(1), 3}});
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
