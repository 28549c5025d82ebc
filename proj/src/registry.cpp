#include <set>
#include <sstream>

#include "jmb/errors.hpp"
#include "jmb/verify.hpp"

namespace jmb {

namespace {

std::string S(std::uint64_t v) { return std::to_string(v); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

class Builder {
 public:
  void add(std::string id, std::string chain, std::string anchor,
           CharCondition chars = CharCondition::any(), bool disputed = false) {
    if (!ids_.insert(id).second) throw ValidationError("duplicate claim id " + id);
    claims_.push_back(Claim{std::move(id), std::move(chain), std::move(anchor), std::move(chars),
                            disputed});
  }
  std::vector<Claim> take() { return std::move(claims_); }

 private:
  std::vector<Claim> claims_;
  std::set<std::string> ids_;
};

// Cells of the power-replacement grid where the stated inequality is
// claimed; the remaining cells are the stated exceptions.
bool power_grid_claimed(unsigned r, unsigned l, unsigned L) {
  if (r >= 3 && l != 5) return true;
  if (l == 5 && (r >= 4 || (r == 3 && L > 2))) return true;
  if (r == 2 && l != 2 && l != 5) return L > 3;
  if (r == 2 && l == 5) return L > 2;
  return r == 2 && l == 2;
}

void power_replacement(Builder& b) {
  for (unsigned r = 3; r <= 12; ++r) {
    b.add("L10.base.r" + S(r), "2*fact(" + S(r) + "+2) < fact(" + S(r) + "^2+1)",
          "power-replacement:generic-base");
  }
  const unsigned grid_primes[] = {2, 3, 5, 7, 11, 13};
  for (unsigned l : grid_primes) {
    for (unsigned r = 2; r <= 12; ++r) {
      const std::string N = "N(" + S(r) + "," + S(l) + ")";
      for (unsigned L = 2; L <= 6; ++L) {
        const std::string lhs = N + "^" + S(L) + "*fact(" + S(L) + ")";
        const std::string rhs = "fact(" + S(r) + "^" + S(L) + "+1)";
        const std::string cell = ".r" + S(r) + ".t" + S(L) + ".l" + S(l);
        if (power_grid_claimed(r, l, L)) {
          b.add("L10" + cell, lhs + " < " + rhs, "power-replacement:grid");
          if (L <= 5) {
            b.add("L10.step" + cell,
                  N + "^" + S(L + 1) + "*fact(" + S(L + 1) + ") < (" + lhs + ")^2 < fact(" +
                      S(r) + "^" + S(L + 1) + "+1)",
                  "power-replacement:induction");
          }
        } else {
          b.add("L10.exception" + cell, lhs + " >= " + rhs, "power-replacement:exceptions");
        }
      }
    }
  }

  std::set<std::uint64_t> lifted;
  for (unsigned r = 2; r <= 12; ++r) {
    for (unsigned L = 2; L <= 6 && ipow(r, L) <= 150; ++L) lifted.insert(ipow(r, L));
  }
  for (std::uint64_t R : lifted) {
    b.add("Cor11.lift.R" + S(R), "fact(" + S(R) + "+1) <= N(" + S(R) + ",l)",
          "single-factor:lift");
  }
  b.add("Cor11.r2.t2", "2*N(2,l)^2 < N(4,l)", "single-factor:r2");
  b.add("Cor11.r2.t3", "6*N(2,l)^3 < N(8,l)", "single-factor:r2");
  b.add("Cor11.r3.t2.l5", "2*N(3,5)^2 = N(9,5)", "single-factor:r3-l5");
}

void single_degree(Builder& b) {
  for (unsigned p = 2; p <= 20; ++p) {
    for (unsigned q = p + 1; q <= 20; ++q) {
      const std::string id = ".p" + S(p) + ".q" + S(q);
      if (p * q > 12) {
        b.add("L12" + id, "N(" + S(p) + ",l)*N(" + S(q) + ",l) < fact(" + S(p * q) + "+1)",
              "two-factor:grid");
      } else {
        b.add("L12.small" + id, "N(" + S(p) + ",l)*N(" + S(q) + ",l) < N(" + S(p * q) + ",l)",
              "two-factor:small");
      }
      if (p >= 13) {
        b.add("L12.big" + id,
              "fact(" + S(p) + "+2)*fact(" + S(q) + "+2) < fact(" + S(p * q) + "+1)",
              "two-factor:both-large");
      }
    }
  }
  b.add("L12.chain", "16^12 = 2^48 > 2^8*10^12", "two-factor:chain");
  for (unsigned p = 2; p <= 12; ++p) {
    b.add("L12.cap.p" + S(p), "2^8*10^12 > N(" + S(p) + ",l)", "two-factor:chain");
  }
  for (unsigned q = 13; q <= 20; ++q) {
    b.add("L12.tail.q" + S(q),
          "fact(2*" + S(q) + "+1) >= N(" + S(q) + ",l)*prod(" + S(q) + "+3,2*" + S(q) +
              "+1) >= 16^12*N(" + S(q) + ",l)",
          "two-factor:chain");
  }
}

void symmetric_constituents(Builder& b) {
  for (unsigned m = 8; m <= 20; ++m) {
    for (unsigned t = 2; t <= 6; ++t) {
      b.add("L22.wreath.m" + S(m) + ".t" + S(t),
            "fact(" + S(m) + "+2)^" + S(t) + "*fact(" + S(t) + ") < fact(" + S(t * m) + "+1)",
            "symmetric:wreath");
    }
    for (unsigned k = m; k <= 20; ++k) {
      b.add("L22.sum.m" + S(m) + ".k" + S(k),
            "fact(" + S(m) + "+2)*fact(" + S(k) + "+2) < fact(" + S(m + k) + "+1)",
            "symmetric:sum");
    }
  }
  for (unsigned m = 10; m <= 52; ++m) {
    const unsigned r = m / 2;
    b.add("L23.m" + S(m), "fact(" + S(m) + "+2) < 60^" + S(r) + "*fact(" + S(r) + ")",
          "symmetric:lower-degree");
  }
  b.add("L23.sharp", "fact(55) > 60^26*fact(26)", "symmetric:lower-degree-sharp");

  b.add("L24.i.t2", "fact(2) < idx(2,l)", "trivial:multiplicity", CharCondition::not_in({2}));
  b.add("L24.i.t3", "fact(3) < idx(3,l)", "trivial:multiplicity");
  const unsigned grid_primes[] = {2, 3, 5, 7, 11, 13};
  for (unsigned l : grid_primes) {
    for (unsigned m = 10; m <= 70; ++m) {
      if (m == 12 || (m + 1) % l == 0) continue;
      const std::string tag = ".m" + S(m) + ".l" + S(l);
      const std::string P = "idx(" + S(m) + "," + S(l) + ")";
      if ((m + 2) % l != 0) {
        b.add("L24.ii" + tag, P + " < idx(" + S(m + 1) + "," + S(l) + ")",
              "trivial:beside-symmetric");
      } else {
        b.add("L24.ii" + tag, P + "*fact(2) < idx(" + S(m + 2) + "," + S(l) + ")",
              "trivial:beside-symmetric");
      }
    }
  }
}

void characteristic_three(Builder& b) {
  b.add("L27.P12", "idx(12,3) < idx(4,3)^3*fact(3)", "l3:middle-degrees");
  b.add("L27.P11", "idx(11,3) < idx(10,3)", "l3:middle-degrees");
  b.add("L27.P10", "idx(10,3) < idx(4,3)^2*fact(2)*idx(2,3)", "l3:middle-degrees");
  b.add("L27.P8", "idx(8,3) < idx(4,3)^2*fact(2)", "l3:middle-degrees");
  b.add("L27.P7", "idx(7,3) < idx(4,3)*idx(3,3)", "l3:middle-degrees");
  b.add("L27.P6", "idx(6,3) < idx(4,3)*idx(2,3)", "l3:middle-degrees");

  b.add("P28.wr34", "60^34*fact(34) > fact(69)", "l3:threshold");
  b.add("P28.sym35", "60^35*fact(35) < idx(70,3)", "l3:threshold");

  for (unsigned r = 2; r <= 22; ++r) {
    const unsigned s = 3 * r / 2;
    b.add("CaseIII.P3.r" + S(r),
          "idx(3,3)^" + S(r) + "*fact(" + S(r) + ") < 60^" + S(s) + "*fact(" + S(s) + ")",
          "l3:subdegree-3");
  }
  for (unsigned t = 2; t <= 32; ++t) {
    b.add("CaseIII.P2P3.t" + S(t),
          "60^" + S(t) + "*fact(" + S(t) + ")*idx(3,3) < 60^" + S(t + 1) + "*fact(" + S(t + 1) +
              ")",
          "l3:subdegree-3");
  }
  b.add("CaseIII.P2P3", "idx(2,3)*idx(3,3) < idx(4,3)", "l3:subdegree-3");
  for (unsigned t = 8; t <= 17; ++t) {
    b.add("CaseIII.t" + S(t),
          "60^(2*" + S(t) + ")*fact(2*" + S(t) + ") > 40320^" + S(t) + "*fact(" + S(t) + ")",
          "l3:subdegree-4");
  }
  b.add("CaseIII.exp.4", "60^14*fact(4) < 40320^7*fact(7)", "l3:subdegree-4-printed",
        CharCondition::any(), true);
  b.add("CaseIII.exp.14", "60^14*fact(14) < 40320^7*fact(7)", "l3:subdegree-4-printed",
        CharCondition::any(), true);
}

void characteristic_two(Builder& b) {
  b.add("S8.P13", "idx(13,2) < idx(12,2)", "l2:middle-degrees");
  b.add("S8.P12", "idx(12,2) < idx(6,2)^2*fact(2)", "l2:middle-degrees");
  b.add("S8.P11", "idx(11,2) < idx(10,2)", "l2:middle-degrees");
  b.add("S8.P10", "idx(10,2) < idx(6,2)*idx(4,2)", "l2:middle-degrees");
  b.add("S8.P9", "idx(9,2) < idx(6,2)*idx(3,2)", "l2:middle-degrees");

  b.add("S8.cap.m3", "idx(3,2)^6*fact(6) < idx(18,2)", "l2:multiplicity-caps");
  b.add("S8.cap.m4", "idx(4,2)^4*fact(4) < idx(16,2)", "l2:multiplicity-caps");
  b.add("S8.cap.m5", "idx(5,2)^2*fact(2) < idx(10,2)", "l2:multiplicity-caps");
  b.add("S8.cap.m6", "idx(6,2)^6*fact(6) < idx(36,2)", "l2:multiplicity-caps");

  b.add("S8.P3.t2", "idx(3,2)^2*fact(2) < idx(6,2)", "l2:subdegree-3");
  b.add("S8.P3.t3", "idx(3,2)^3*fact(3) < idx(6,2)*idx(3,2)", "l2:subdegree-3");
  b.add("S8.P3.t4", "idx(3,2)^4*fact(4) < idx(6,2)^2*fact(2)", "l2:subdegree-3");
  b.add("S8.P3.t5", "idx(3,2)^5*fact(5) < idx(6,2)^2*fact(2)*idx(3,2)", "l2:subdegree-3");
  b.add("S8.P4.t2", "idx(4,2)^2*fact(2) < idx(6,2)*fact(2)", "l2:subdegree-4");
  b.add("S8.P4.t3", "idx(4,2)^3*fact(3) < idx(6,2)^2*fact(2)", "l2:subdegree-4");

  b.add("L29.P345", "idx(3,2)*idx(4,2)*idx(5,2) < idx(6,2)^2*fact(2)", "l2:small-subdegrees");
  b.add("L29.P34", "idx(3,2)*idx(4,2) < idx(6,2)", "l2:small-subdegrees");
  b.add("L29.P35", "idx(3,2)*idx(5,2) < idx(6,2)*fact(2)", "l2:small-subdegrees");
  b.add("L29.P45", "idx(4,2)*idx(5,2) < idx(6,2)*fact(3)", "l2:small-subdegrees");
  b.add("L29.P3P1", "idx(3,2) < idx(4,2)", "l2:small-subdegrees");
  b.add("L29.P4P1", "idx(4,2) < idx(5,2)", "l2:small-subdegrees");
  b.add("L29.P5P1", "idx(5,2) < idx(6,2)", "l2:small-subdegrees");

  b.add("L30.P6", "idx(6,2)*5 < prod(16,21)", "l2:symmetric-alone");
  for (unsigned r = 3; r <= 5; ++r) {
    b.add("L30.P" + S(r), "idx(" + S(r) + ",2) < prod(16," + S(15 + r) + ")",
          "l2:symmetric-alone");
  }
  b.add("P31", "idx(6,2)^5*fact(5)*idx(3,2) > fact(34)", "l2:threshold");
}

void characteristic_five(Builder& b) {
  b.add("L32.P12", "idx(12,5) < idx(6,5)^2*fact(2)", "l5:middle-degrees");
  b.add("L32.P11", "idx(11,5) < idx(6,5)*idx(4,5)", "l5:middle-degrees");
  b.add("L32.P10", "idx(10,5) < idx(6,5)*idx(4,5)", "l5:middle-degrees");
  b.add("L32.P8", "idx(8,5) < idx(4,5)^2*fact(2)", "l5:middle-degrees");
  b.add("L32.P6", "idx(6,5) < idx(3,5)^2*fact(2)", "l5:middle-degrees");

  b.add("L33.i", "fact(59) < 2520^19*fact(19) < fact(60)", "l5:symmetric-transition");
  b.add("L33.ii", "fact(70) < 2520^23*fact(23) < fact(71)", "l5:symmetric-transition");
  for (unsigned t = 2; t <= 12; ++t) {
    const unsigned s = 2 * t / 3;
    const unsigned r = 2 * t - 3 * s;
    b.add("L33.iii.t" + S(t),
          "24^" + S(t) + "*fact(" + S(t) + ") < 2520^" + S(s) + "*fact(" + S(s) + ")*fact(" +
              S(r) + ")",
          "l5:subdegree-2");
  }
  for (unsigned t = 13; 2 * t <= 69; ++t) {
    if ((2 * t + 1) % 5 == 0) continue;  // no constituent of subdegree 2t
    b.add("L33.iii.t" + S(t), "24^" + S(t) + "*fact(" + S(t) + ") < idx(" + S(2 * t) + ",5)",
          "l5:subdegree-2");
  }
  b.add("L33.iii.P2P1", "idx(2,5) < idx(3,5)", "l5:subdegree-2");
  for (unsigned t = 6; 4 * t <= 69; ++t) {
    const unsigned s = 4 * t / 3;
    const unsigned r = 4 * t - 3 * s;
    const std::string rest = r == 2 ? "*idx(2,5)" : "";
    b.add("L33.iv.t" + S(t),
          "idx(4,5)^" + S(t) + "*fact(" + S(t) + ") < 2520^" + S(s) + "*fact(" + S(s) + ")" +
              rest,
          "l5:subdegree-4");
  }
  b.add("L33.iv.t5P1", "idx(4,5)^5*fact(5) < idx(3,5)^7*fact(7)", "l5:subdegree-4");

  b.add("L34.P4", "60^3 > 5*25920", "l5:symmetric-alone");
  b.add("L34.P3", "prod(61,68) > 2520^3*23*22*21", "l5:symmetric-alone");
  b.add("P35", "2520^23*fact(23) > fact(70)", "l5:threshold");
}

}  // namespace

const std::vector<unsigned>& probe_primes() {
  static const std::vector<unsigned> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                               37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
  return primes;
}

const std::vector<Claim>& registry_claims() {
  static const std::vector<Claim> claims = [] {
    Builder b;
    power_replacement(b);
    single_degree(b);
    symmetric_constituents(b);
    characteristic_three(b);
    characteristic_two(b);
    characteristic_five(b);
    b.add("W18", "18^4*fact(20) > idx(3,5)^6*fact(6)", "weisfeiler:closest");
    return b.take();
  }();
  return claims;
}

}  // namespace jmb
