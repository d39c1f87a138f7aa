#define BINS 4
#define SAMPLES 256

void histogram(const int data[SAMPLES], int bins[BINS]) {
#pragma HLS array_partition variable=bins complete
    clear: for (int b = 0; b < 4; b++) {
        bins[b] = 0;
    }
    count: for (int i = 0; i < 256; i++) {
#pragma HLS pipeline II=1
        int v = data[i];
        int bin = (v >> 6) & 3;
        switch (bin) {
            case 0: bins[0]++; break;
            case 1: bins[1]++; break;
            case 2: bins[2]++; break;
            default: bins[3]++; break;
        }
    }
}
