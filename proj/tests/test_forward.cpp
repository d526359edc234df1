#include "hrum/forward.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hrum;
using hrum::testing::load_example;
using hrum::testing::q;

namespace {

HarmfulWeights w(std::initializer_list<const char*> texts) {
    std::vector<Rational> v;
    for (const char* t : texts) v.push_back(q(t));
    return HarmfulWeights(v);
}

}  // namespace

TEST(HarmfulWeightsTest, Validation) {
    EXPECT_THROW(HarmfulWeights({}), std::invalid_argument);
    EXPECT_THROW(w({"1/2", "1/3"}), std::invalid_argument);
    EXPECT_THROW(w({"3/2", "-1/2"}), std::invalid_argument);
    EXPECT_NO_THROW(HarmfulWeights({q("0.5"), q("0.4999")}, Tolerance(q("1/1000"))));
    EXPECT_EQ(w({"0", "1/2", "0", "1/2"}).max_positive_index(), 3u);
    EXPECT_EQ(HarmfulWeights::point_mass(4, 2), w({"0", "0", "1", "0"}));
}

TEST(Simulate, DictatorTable) {
    const GroundSet g({"100", "70", "50"});
    const auto rho = simulate(g, parse_order(g, "100,70,50"), w({"0.5", "0.3", "0.2"}));
    EXPECT_EQ(rho, load_example("dictator.json"));
    const Menu top_pair = parse_menu_key(g, "100,70");
    EXPECT_EQ(rho.prob(0, top_pair), q("1/2"));
}

TEST(Simulate, TaskChoiceTable) {
    const GroundSet g({"h", "m", "l"});
    const auto rho = simulate(g, parse_order(g, "h,m,l"), w({"0.4", "0.2", "0.4"}));
    EXPECT_EQ(rho, load_example("tasks.json"));
}

TEST(Simulate, FoodTable) {
    const GroundSet g({"p", "f", "s"});
    EXPECT_EQ(simulate(g, parse_order(g, "p,f,s"), w({"3/10", "1/10", "3/5"})), load_example("food.json"));
}

TEST(ChoiceProb, UniformWeightsOnFourItems) {
    const GroundSet g({"w", "x", "y", "z"});
    const auto order = parse_order(g, "w,x,y,z");
    const auto uniform = w({"1/4", "1/4", "1/4", "1/4"});
    const Menu xz = parse_menu_key(g, "x,z");
    EXPECT_EQ(choice_prob_direct(order, uniform, xz, 1), q("1/2"));
    EXPECT_EQ(choice_prob_closed(order, uniform, xz, 1), q("1/2"));
    EXPECT_EQ(choice_prob_by_shape(order, uniform, xz, 1), q("1/2"));
}

TEST(ChoiceProb, RejectsItemOutsideMenu) {
    const auto order = LinearOrder::identity(3);
    const auto weights = HarmfulWeights::point_mass(3, 0);
    EXPECT_THROW(choice_prob_direct(order, weights, Menu::singleton(0), 1), std::invalid_argument);
    EXPECT_THROW(choice_prob_closed(order, weights, Menu::singleton(0), 1), std::invalid_argument);
}

TEST(MenuShapeTest, FourShapes) {
    const auto order = LinearOrder::identity(4);
    EXPECT_EQ(menu_shape(order, Menu::singleton(0).with(2), 2), MenuShape::AboveOnly);
    EXPECT_EQ(menu_shape(order, Menu::singleton(0).with(2).with(3), 2), MenuShape::AboveAndBelow);
    EXPECT_EQ(menu_shape(order, Menu::singleton(2), 2), MenuShape::Alone);
    EXPECT_EQ(menu_shape(order, Menu::singleton(2).with(3), 2), MenuShape::BelowOnly);
}

TEST(ChoiceProb, ThreeFormsAgreeWithPairwiseOracle) {
    gen::Rng rng(11);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto order = gen::order(n, rng);
            const auto raw = gen::weights(n, rng);
            const HarmfulWeights weights(raw);
            const std::vector<Item> ranking(order.ranking().begin(), order.ranking().end());
            for (Menu::Bits bits = 1; bits < (Menu::Bits{1} << n); ++bits) {
                const Menu menu = Menu::from_bits(bits);
                for (Item x : menu.items()) {
                    const Rational expected = oracle::choice_prob(ranking, raw, menu, x);
                    EXPECT_EQ(choice_prob_direct(order, weights, menu, x), expected);
                    EXPECT_EQ(choice_prob_closed(order, weights, menu, x), expected);
                    EXPECT_EQ(choice_prob_by_shape(order, weights, menu, x), expected);
                }
            }
        }
    }
}

TEST(Lottery, DropsZeroWeightsAndSimulates) {
    const GroundSet g({"p", "f", "s"});
    const auto order = parse_order(g, "p,f,s");
    const auto weights = w({"1/2", "0", "1/2"});
    const auto lottery = to_lottery(order, weights);
    EXPECT_EQ(lottery.weights().size(), 2u);
    EXPECT_EQ(simulate_rum(g, lottery), simulate(g, order, weights));
}

TEST(Lottery, Validation) {
    std::map<LinearOrder, Rational> bad{{LinearOrder::identity(2), q("1/2")}};
    EXPECT_THROW(GeneralLottery{bad}, std::invalid_argument);
    std::map<LinearOrder, Rational> mixed{{LinearOrder::identity(2), q("1/2")}, {LinearOrder::identity(3), q("1/2")}};
    EXPECT_THROW(GeneralLottery{mixed}, std::invalid_argument);
}
