#define LEN 128

void saxpy(float alpha, const float x[LEN], float y[LEN]) {
#pragma HLS array_reshape variable=x cyclic factor=4 dim=1
#pragma HLS array_reshape variable=y cyclic factor=4 dim=1
#pragma HLS dataflow
    axpy: for (int i = 0; i < 128; i += 4) {
#pragma HLS pipeline
        y[i] = alpha * x[i] + y[i];
        y[i + 1] = alpha * x[i + 1] + y[i + 1];
        y[i + 2] = alpha * x[i + 2] + y[i + 2];
        y[i + 3] = alpha * x[i + 3] + y[i + 3];
    }
}
