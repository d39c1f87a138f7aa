#define TAPS 8

static int shift_reg[TAPS];

int fir(const int coeff[TAPS], int sample) {
    int acc = 0;
    /* shift the delay line and accumulate taps */
    shift_mac: for (int t = 7; t > 0; t--) {
#pragma HLS unroll factor=2
        shift_reg[t] = shift_reg[t - 1];
        acc += shift_reg[t] * coeff[t];
    }
    shift_reg[0] = sample;
    acc += sample * coeff[0];
    return acc;
}
