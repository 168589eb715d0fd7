#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hameig/hamming.hpp"

using namespace hameig;

TEST_CASE("graph parameters validate their ranges") {
    CHECK_THROWS_AS(GraphParams(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(GraphParams(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(GraphParams(-1, 3), std::invalid_argument);
    // q^n above the vertex cap is refused rather than silently overflowing.
    CHECK_THROWS_AS(GraphParams(40, 10), std::invalid_argument);
    CHECK_THROWS_AS(GraphParams(3, 3, /*vertex_cap=*/26), std::invalid_argument);

    const GraphParams params(3, 4);
    CHECK(params.n() == 3);
    CHECK(params.q() == 4);
    CHECK(params.vertex_count() == 64);
    CHECK(params.degree() == 9);
    CHECK(params.stride(1) == 1);
    CHECK(params.stride(2) == 4);
    CHECK(params.stride(3) == 16);
}

TEST_CASE("encode_vertex uses the little-endian radix-q formula") {
    const GraphParams h23(2, 3);
    CHECK(encode_vertex({0, 0}, h23) == 0);
    CHECK(encode_vertex({1, 2}, h23) == 7);  // 1 + 2*3
    CHECK(encode_vertex({1, 0, 1}, GraphParams(3, 2)) == 5);  // 1 + 0 + 4

    CHECK_THROWS_AS(encode_vertex({0}, h23), std::invalid_argument);
    CHECK_THROWS_AS(encode_vertex({0, 3}, h23), std::invalid_argument);
    CHECK_THROWS_AS(encode_vertex({-1, 0}, h23), std::invalid_argument);
}

TEST_CASE("decode_vertex inverts encode_vertex") {
    const GraphParams h23(2, 3);
    CHECK(decode_vertex(0, h23) == Word{0, 0});
    CHECK(decode_vertex(7, h23) == Word{1, 2});
    CHECK(decode_vertex(8, h23) == Word{2, 2});
    CHECK_THROWS_AS(decode_vertex(9, h23), std::out_of_range);
    CHECK_THROWS_AS(decode_vertex(-1, h23), std::out_of_range);

    const GraphParams h34(3, 4);
    for (std::int64_t x = 0; x < h34.vertex_count(); ++x) {
        CHECK(encode_vertex(decode_vertex(x, h34), h34) == x);
    }
}

TEST_CASE("digit extraction matches decode_vertex") {
    const GraphParams params(4, 3);
    for (std::int64_t x = 0; x < params.vertex_count(); ++x) {
        const Word word = decode_vertex(x, params);
        for (int i = 1; i <= params.n(); ++i) {
            CHECK(params.digit(x, i) == word[static_cast<std::size_t>(i - 1)]);
        }
    }
}

TEST_CASE("neighbors enumerate exactly the distance-1 words") {
    const GraphParams h23(2, 3);
    const std::vector<Word> around_origin = neighbors({0, 0}, h23);
    const std::set<Word> expected = {{1, 0}, {2, 0}, {0, 1}, {0, 2}};
    CHECK(std::set<Word>(around_origin.begin(), around_origin.end()) == expected);
    CHECK(around_origin.size() == 4);  // degree n(q-1)

    CHECK(neighbors({0}, GraphParams(1, 3)).size() == 2);
    CHECK(neighbors({1, 2, 3}, GraphParams(3, 4)).size() == 9);

    // Every listed word is at Hamming distance exactly 1, with no duplicates.
    const GraphParams h34(3, 4);
    const Word x = {1, 2, 3};
    const std::vector<Word> list = neighbors(x, h34);
    CHECK(std::set<Word>(list.begin(), list.end()).size() == list.size());
    for (const Word& y : list) {
        CHECK(hamming_distance(x, y) == 1);
    }
}

TEST_CASE("hamming_distance counts differing coordinates") {
    CHECK(hamming_distance({0, 0}, {0, 0}) == 0);
    CHECK(hamming_distance({0, 0}, {1, 2}) == 2);
    CHECK(hamming_distance({1, 2, 0}, {1, 0, 0}) == 1);
    CHECK_THROWS_AS(hamming_distance({0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("in_layer tests one coordinate") {
    const GraphParams h23(2, 3);
    CHECK(in_layer({1, 2}, 2, 2, h23));
    CHECK_FALSE(in_layer({1, 2}, 1, 0, h23));

    int count = 0;
    for (std::int64_t x = 0; x < h23.vertex_count(); ++x) {
        if (in_layer(decode_vertex(x, h23), 1, 0, h23)) {
            ++count;
        }
    }
    CHECK(count == 3);  // layer size q^(n-1)
}

TEST_CASE("words format most significant coordinate last") {
    CHECK(format_word({1, 2}) == "1,2");
    CHECK(format_word({0}) == "0");
}
