// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "earlyadd/delay_profile.hpp"
#include "earlyadd/errors.hpp"
#include "earlyadd/serialize.hpp"

using namespace earlyadd;

TEST_CASE("validate_profile accepts the bundled example shape") {
    const DelayProfile dp = validate_profile({0, 1, 2, 2, 3, 3, 4, 5, 4, 3, 2, 1});
    CHECK(dp.width() == 12);
    CHECK(dp.arrival(0) == 0);
    CHECK(dp.arrival(7) == 5);
    CHECK(dp.max_arrival() == 5);
}

TEST_CASE("validate_profile minimal and error cases") {
    CHECK(validate_profile({0}).width() == 1);
    CHECK_THROWS_AS(validate_profile({}), EmptyProfile);
    try {
        validate_profile({0, -1});
        FAIL("expected NegativeArrival");
    } catch (const NegativeArrival& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("profile json loading") {
    const DelayProfile dp = profile_from_json(R"({"arrival":[0,1,2,2,3,3,4,5,4,3,2,1]})");
    CHECK(dp.width() == 12);
    CHECK_THROWS_AS(profile_from_json(R"({"arrival":[]})"), EmptyProfile);
    CHECK_THROWS_AS(profile_from_json("not json"), ParseError);
    CHECK_THROWS_AS(profile_from_json(R"({"arrival":[1.5]})"), ParseError);
    CHECK_THROWS_AS(profile_from_json(R"({"wrong":[1]})"), ParseError);
    CHECK_THROWS_AS(profile_from_json(R"({"arrival":[0,-2]})"), NegativeArrival);
}

TEST_CASE("profile json round trip") {
    const DelayProfile dp = validate_profile({0, 1, 2, 2, 3, 3, 4, 5, 4, 3, 2, 1});
    const std::string text = profile_to_json(dp);
    const DelayProfile back = profile_from_json(text);
    CHECK(back.width() == dp.width());
    for (int i = 0; i < dp.width(); ++i) {
        CHECK(back.arrival(i) == dp.arrival(i));
    }
    CHECK(profile_to_json(back) == text);
}
