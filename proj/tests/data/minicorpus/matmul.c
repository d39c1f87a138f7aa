#define DIM 16

void matmul(const int a[DIM][DIM], const int b[DIM][DIM], int c[DIM][DIM]) {
#pragma HLS array_partition variable=a block factor=4 dim=2
#pragma HLS array_partition variable=b block factor=4 dim=1
    row: for (int i = 0; i < 16; i++) {
        col: for (int j = 0; j < 16; j++) {
#pragma HLS pipeline II=2
            int acc = 0;
            dot: for (int k = 0; k < 16; k++) {
#pragma HLS unroll factor=4
                acc += a[i][k] * b[k][j];
            }
            c[i][j] = acc;
        }
    }
}
