#include <random>

#include <gtest/gtest.h>

#include "actr/error.hpp"
#include "actr/experiment.hpp"
#include "actr/model_parser.hpp"

using namespace actr;

namespace {

constexpr std::string_view kRecognizeWin = R"(
(chunk-type game me opponent result)
(p recognize-win
   =goal>  isa game   me rock   opponent scissors
 ==>
   =goal>  result win)
)";

Error parse_error(std::string_view text) {
    try {
        parse_model(text);
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "parsed without error:\n" << text;
    return Error(ErrorCode::InvalidArgument, "none");
}

}  // namespace

TEST(Parser, RecognizeWin) {
    ModelAST ast = parse_model(kRecognizeWin);
    ASSERT_EQ(ast.productions.size(), 1u);
    const Production& p = ast.productions[0];
    EXPECT_EQ(p.name, "recognize-win");
    ASSERT_EQ(p.tests.size(), 1u);
    EXPECT_EQ(p.tests[0].buffer, "goal");
    EXPECT_EQ(p.tests[0].type, "game");
    EXPECT_EQ(p.tests[0].slot_tests,
              (std::vector<SlotTerm>{{"me", Term::constant("rock")}, {"opponent", Term::constant("scissors")}}));
    ASSERT_EQ(p.actions.size(), 1u);
    EXPECT_EQ(p.actions[0].kind, ActionKind::Modify);
    EXPECT_EQ(p.actions[0].slot_updates, (std::vector<SlotTerm>{{"result", Term::constant("win")}}));
}

TEST(Parser, BuiltinModelShape) {
    ModelAST ast = parse_model(builtin::rps_model());
    EXPECT_TRUE(validate_model(ast).empty());
    ASSERT_EQ(ast.productions.size(), 12u);
    EXPECT_EQ(ast.productions[0].name, "play-rock");
    EXPECT_EQ(ast.productions[2].name, "play-scissors");
    for (std::size_t i = 0; i < ast.productions.size(); ++i) EXPECT_EQ(ast.productions[i].source_index, i);

    const Action& a = ast.productions[1].actions.at(0);
    EXPECT_EQ(a.binds, (std::vector<HostBinding>{{"x", "next-move"}}));

    EXPECT_EQ(ast.annotations.at("detect-win-paper").reward, 2.0);
    EXPECT_TRUE(ast.annotations.at("detect-win-paper").success);
    EXPECT_EQ(ast.annotations.at("detect-defeat-rock").reward, 0.0);
    EXPECT_TRUE(ast.annotations.at("detect-defeat-rock").failure);
    EXPECT_FALSE(ast.annotations.contains("detect-draw-rock"));
    EXPECT_EQ(ast.buffer_inits, (std::vector<BufferInit>{{"goal", "g1"}}));
}

TEST(Parser, UnboundRhsVariable) {
    Error e = parse_error(R"((chunk-type g a)
(p r =goal> isa g a nil ==> =goal> a =x))");
    EXPECT_EQ(e.code(), ErrorCode::UnboundRhsVariable);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
}

TEST(Parser, DuplicateBufferTest) {
    EXPECT_EQ(parse_error("(chunk-type g a)(p r =goal> isa g a 1 =goal> isa g a 2 ==> -goal>)").code(),
              ErrorCode::DuplicateBufferTest);
}

TEST(Parser, Errors) {
    EXPECT_EQ(parse_error("(p r =goal> isa g ==>) (p r =goal> isa g ==>)").code(), ErrorCode::DuplicateRuleName);
    EXPECT_EQ(parse_error("(p r =goal> isa g ==>) (spp q :reward 1)").code(), ErrorCode::UnknownAnnotationTarget);
    EXPECT_EQ(parse_error("(p r =goal> isa g ==> +retrieval> isa g)").code(), ErrorCode::Unsupported);
    EXPECT_EQ(parse_error("(p r =goal> isa g ==> !bind! =x m)").code(), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("(p r =goal> isa g").code(), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("(p r =goal> g ==>)").code(), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("(chunk-type g a) )").code(), ErrorCode::SyntaxError);
    EXPECT_EQ(parse_error("(spp r :reward abc)").code(), ErrorCode::SyntaxError);
}

TEST(Parser, SyntaxErrorReportsPosition) {
    Error e = parse_error("(chunk-type g a)\n\n   (bogus-form)");
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
}

TEST(Parser, CommentsAndWrapper) {
    ModelAST ast = parse_model(R"(
; leading comment
(define-model m
  (chunk-type g a) ; trailing
  (add-dm (c1 isa g a nil))
  (goal-focus c1))
)");
    EXPECT_EQ(ast.chunk_types.size(), 1u);
    EXPECT_EQ(ast.buffer_inits, (std::vector<BufferInit>{{"goal", "c1"}}));
}

TEST(Validate, Diagnostics) {
    EXPECT_EQ(validate_model(parse_model(R"((chunk-type game me opponent)
(p r =goal> isa game score 1 ==> -goal>))"))
                  .size(),
              1u);
    ModelAST ast = parse_model("(chunk-type g a)(p r =goal> isa g ==>)");
    ast.annotations["missing"].reward = 2.0;
    EXPECT_EQ(validate_model(ast).size(), 1u);

    ModelAST undeclared = parse_model("(chunk-type g a)(p r =visual> isa g ==>)");
    EXPECT_EQ(validate_model(undeclared).size(), 1u);

    ModelAST bad_focus = parse_model("(chunk-type g a)(goal-focus nowhere)");
    EXPECT_EQ(validate_model(bad_focus).size(), 1u);
}

// ---- round trip over generated models

namespace {

struct AstGen {
    std::mt19937_64 rng;

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
    bool coin() { return below(2) == 0; }
    Symbol sym(std::string_view prefix, std::size_t n) { return std::string(prefix) + std::to_string(below(n)); }

    ModelAST make() {
        ModelAST ast;
        std::vector<Symbol> types;
        for (std::size_t t = 0, n = 1 + below(3); t < n; ++t) {
            ChunkTypeDecl d{"type" + std::to_string(t), {}};
            for (std::size_t s = 0, k = below(4); s < k; ++s) d.slots.push_back("s" + std::to_string(s));
            types.push_back(d.name);
            ast.chunk_types.push_back(std::move(d));
        }
        for (std::size_t c = 0, n = below(4); c < n; ++c) {
            const auto& ty = ast.chunk_types[below(ast.chunk_types.size())];
            ChunkDecl d{"c" + std::to_string(c), ty.name, {}};
            for (const auto& s : ty.slots)
                if (coin()) d.values.emplace_back(s, coin() ? kNil : sym("v", 5));
            ast.initial_chunks.push_back(std::move(d));
        }
        if (!ast.initial_chunks.empty() && coin())
            ast.buffer_inits.push_back({coin() ? "goal" : "imaginal", ast.initial_chunks[0].name});

        for (std::size_t p = 0, n = below(5); p < n; ++p) {
            Production prod;
            prod.name = "rule-" + std::to_string(p);
            prod.source_index = p;
            std::vector<Symbol> vars;
            std::vector<Symbol> bufs = {"goal", "imaginal", "visual"};
            for (std::size_t t = 0, k = below(3); t < k; ++t) {
                BufferTest bt{bufs[t], types[below(types.size())], {}};
                for (std::size_t s = 0, m = below(4); s < m; ++s) {
                    Term v = coin() ? Term::variable(sym("x", 3)) : Term::constant(sym("v", 5));
                    if (v.is_variable()) vars.push_back(v.text);
                    bt.slot_tests.push_back({"s" + std::to_string(s), v});
                }
                prod.tests.push_back(std::move(bt));
            }
            for (std::size_t a = 0, k = below(3); a < k; ++a) {
                Action act;
                act.buffer = bufs[below(bufs.size())];
                if (coin()) {
                    act.kind = ActionKind::Clear;
                } else {
                    if (below(4) == 0) act.type = types[below(types.size())];
                    if (coin()) {
                        act.binds.push_back({sym("h", 3), "prov" + std::to_string(below(2))});
                        vars.push_back(act.binds.back().variable);
                    }
                    for (std::size_t s = 0, m = below(3); s < m; ++s) {
                        Term v = !vars.empty() && coin() ? Term::variable(vars[below(vars.size())])
                                                         : Term::constant(sym("v", 5));
                        act.slot_updates.push_back({"s" + std::to_string(s), v});
                    }
                }
                prod.actions.push_back(std::move(act));
            }
            if (coin()) {
                Annotation ann;
                if (coin()) ann.reward = static_cast<double>(below(41)) / 4.0 - 5.0;
                ann.success = coin();
                ann.failure = !ann.success && coin();
                ast.annotations[prod.name] = ann;
            }
            ast.productions.push_back(std::move(prod));
        }
        return ast;
    }
};

}  // namespace

TEST(Parser, RoundTripGeneratedModels) {
    AstGen gen{std::mt19937_64(20240611)};
    for (int i = 0; i < 500; ++i) {
        ModelAST ast = gen.make();
        const std::string text = to_source(ast);
        ModelAST back;
        ASSERT_NO_THROW(back = parse_model(text)) << text;
        ASSERT_EQ(back, ast) << text;
        EXPECT_EQ(to_source(back), text);
    }
}

TEST(Parser, RoundTripBuiltinModel) {
    ModelAST ast = parse_model(builtin::rps_model());
    EXPECT_EQ(parse_model(to_source(ast)), ast);
}
