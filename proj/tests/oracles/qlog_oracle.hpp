#pragma once

#include <gmpxx.h>

// floor(log_{num/den} x) without logarithms: n is the floor exactly when
// num^n ≤ x·den^n and num^(n+1) > x·den^(n+1). Powers for the current n are
// advanced one step at a time, so checking a nondecreasing sequence of
// claimed floors costs a few small multiplications per step.
namespace oracle {

class PowerLadder {
public:
    PowerLadder(unsigned long num, unsigned long den) : num_(num), den_(den), pn_(1), pd_(1), next_n_(num), next_d_(den) {}

    long n() const { return n_; }

    void advance_to(long n) {
        if (n < n_) {
            n_ = 0;
            pn_ = 1;
            pd_ = 1;
        }
        if (n - n_ > 64) {
            mpz_ui_pow_ui(pn_.get_mpz_t(), num_, static_cast<unsigned long>(n));
            mpz_ui_pow_ui(pd_.get_mpz_t(), den_, static_cast<unsigned long>(n));
            n_ = n;
        }
        while (n_ < n) {
            pn_ *= num_;
            pd_ *= den_;
            ++n_;
        }
        next_n_ = pn_ * num_;
        next_d_ = pd_ * den_;
    }

    // (num/den)^n ≤ x
    bool at_most(const mpz_class& x) const { return pn_ <= x * pd_; }
    // (num/den)^(n+1) > x
    bool next_above(const mpz_class& x) const { return next_n_ > x * next_d_; }

    bool is_floor_of(const mpz_class& x) const { return at_most(x) && next_above(x); }

private:
    unsigned long num_, den_;
    long n_ = 0;
    mpz_class pn_, pd_, next_n_, next_d_;
};

}  // namespace oracle
