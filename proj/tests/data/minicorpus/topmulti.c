#define N 32

int scale_bias(int v, int gain) {
#pragma HLS inline
    return v * gain + 3;
}

int clip(int v) {
#pragma HLS function_instantiate variable=v
    if (v > 255) return 255;
    if (v < 0) return 0;
    return v;
}

int top(const int data[N], int gain) {
    int acc = 0;
    main_loop: for (int i = 0; i < 32; i++) {
#pragma HLS pipeline II=4
        int s = scale_bias(data[i], gain);
        acc += clip(s);
    }
    return acc;
}
