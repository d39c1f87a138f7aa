#include <stdint.h>

#define N 64

int dotprod(const int a[N], const int b[N]) {
    int acc = 0;
    sum_loop: for (int i = 0; i < 64; i++) {
#pragma HLS unroll factor=8
#pragma HLS pipeline II=1
        acc += a[i] * b[i];
    }
    return acc;
}
