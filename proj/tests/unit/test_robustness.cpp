#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "hlsqor/dataset.hpp"
#include "hlsqor/errors.hpp"
#include "hlsqor/ir_parser.hpp"
#include "hlsqor/regressor.hpp"
#include "hlsqor/rng.hpp"
#include "hlsqor/source_scanner.hpp"

using namespace hlsqor;

namespace {

std::string read_corpus(const char* name, const char* ext) {
    std::ifstream in(std::string(HLSQOR_TEST_DATA_DIR) + "/minicorpus/" + name + ext);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Random single-character edits: overwrite, delete, insert, truncate.
std::string mutate(std::string text, Rng& rng) {
    static const char alphabet[] = "abc%@,;:=<>[]{}()*0129 \n\"!#x";
    const int edits = static_cast<int>(rng.uniform_int(1, 8));
    for (int e = 0; e < edits && !text.empty(); ++e) {
        std::size_t pos = static_cast<std::size_t>(rng.next_below(text.size()));
        switch (rng.next_below(4)) {
            case 0: text[pos] = alphabet[rng.next_below(sizeof(alphabet) - 1)]; break;
            case 1: text.erase(pos, 1); break;
            case 2: text.insert(pos, 1, alphabet[rng.next_below(sizeof(alphabet) - 1)]); break;
            default: text.resize(pos); break;
        }
    }
    return text;
}

}  // namespace

TEST_CASE("mutated IR either parses or reports a typed error") {
    std::string base = read_corpus("histogram", ".ll") + read_corpus("topmulti", ".ll");
    Rng rng(404);
    int parsed = 0;
    int rejected = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::string text = mutate(base, rng);
        try {
            IrModule m = parse_module(text);
            ++parsed;
            (void)m;
        } catch (const Error&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 400);
    CHECK(rejected > 0);
}

TEST_CASE("mutated source either scans or reports a typed error") {
    std::string base = read_corpus("matmul", ".c") + read_corpus("topmulti", ".c");
    Rng rng(405);
    for (int trial = 0; trial < 400; ++trial) {
        std::string text = mutate(base, rng);
        try {
            auto pragmas = scan_pragmas(text);
            auto loops = analyze_loops(text, pragmas);
            auto features = source_features(loops, pragmas);
            for (double v : features.as_array()) CHECK(v >= 0.0);
        } catch (const Error&) {
        }
    }
}

TEST_CASE("mutated dataset CSV either loads or reports a typed error") {
    std::string base = to_csv(synthetic_generate(5, 17, 0.0));
    Rng rng(406);
    for (int trial = 0; trial < 400; ++trial) {
        std::string text = mutate(base, rng);
        try {
            Dataset ds = from_csv(text);
            (void)ds;
        } catch (const Error&) {
        }
    }
}

TEST_CASE("mutated model files either load or report a typed error") {
    Dataset ds = synthetic_generate(30, 18, 0.0);
    std::string base = serialize(train(ModelKind::GradientBoost, ds, Target::ClockPeriod,
                                       {{"trees", 5}}, 18));
    Rng rng(407);
    for (int trial = 0; trial < 300; ++trial) {
        std::string text = mutate(base, rng);
        try {
            TrainedModel m = deserialize(text);
            FeatureVector x;
            x.target_freq_mhz = 100;
            (void)predict(m, x);
        } catch (const Error&) {
        }
    }
}
