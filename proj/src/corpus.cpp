#include "quartic/corpus.hpp"

namespace quartic {

std::string_view source_name(CorpusSource source) {
    switch (source) {
        case CorpusSource::Table1: return "table1";
        case CorpusSource::Table2: return "table2";
        case CorpusSource::Showcase: return "showcase";
        case CorpusSource::K14: return "k14";
    }
    return "unknown";
}

namespace {

QuarticSolution solution(Variant variant, int k, std::initializer_list<const char*> terms, const char* f,
                         const char* g) {
    QuarticSolution sol;
    sol.variant = variant;
    sol.k = k;
    for (const char* t : terms) {
        sol.terms.push_back(parse_integer(t));
    }
    sol.f = parse_integer(f);
    sol.g = parse_integer(g);
    return sol;
}

CorpusRow table_row(CorpusSource source, int k, std::initializer_list<const char*> terms, const char* f,
                    const char* g) {
    const Variant variant = source == CorpusSource::Table1 ? Variant::ThreePlus : Variant::FivePlus;
    return {source, std::string(source_name(source)) + " k=" + std::to_string(k),
            solution(variant, k, terms, f, g), true, ""};
}

CorpusRow showcase(Variant variant, int k, std::initializer_list<const char*> terms, const char* f, const char* g,
                   bool positional = true) {
    const std::string config = std::string(variant_name(variant)) + "/" + std::to_string(k);
    return {CorpusSource::Showcase, "showcase " + config, solution(variant, k, terms, f, g), positional, config};
}

}  // namespace

std::vector<CorpusRow> table_rows() {
    constexpr auto t1 = CorpusSource::Table1;
    constexpr auto t2 = CorpusSource::Table2;
    return {
        table_row(t1, 1, {"30", "120", "272"}, "315", "353"),
        table_row(t1, 2, {"49", "280", "1200"}, "140", "1201"),
        table_row(t1, 3, {"2", "4", "7"}, "6", "9"),
        table_row(t1, 4, {"34", "10", "5"}, "14", "35"),
        table_row(t1, 5, {"69", "40", "40"}, "94", "143"),
        table_row(t1, 6, {"455", "280", "142"}, "170", "483"),
        table_row(t1, 7, {"4", "4", "1"}, "2", "5"),
        table_row(t1, 8, {"3", "2", "2"}, "22", "37"),
        table_row(t1, 9, {"15", "14", "6"}, "34", "59"),
        table_row(t2, 1, {"6", "8", "18", "31", "32"}, "34", "43"),
        table_row(t2, 2, {"2", "6", "8", "13", "20"}, "4", "21"),
        table_row(t2, 3, {"4", "5", "6", "8", "10"}, "8", "13"),
        table_row(t2, 4, {"10", "12", "14", "15", "20"}, "2", "23"),
        table_row(t2, 5, {"3", "4", "6", "8", "14"}, "6", "15"),
        table_row(t2, 6, {"1", "8", "12", "14", "16"}, "4", "19"),
        table_row(t2, 7, {"2", "10", "18", "19", "24"}, "28", "47"),
        table_row(t2, 8, {"4", "5", "8", "10", "18"}, "6", "19"),
        table_row(t2, 9, {"8", "18", "27", "42", "48"}, "10", "55"),
    };
}

std::vector<CorpusRow> showcase_rows() {
    constexpr auto five = Variant::FivePlus;
    constexpr auto three = Variant::ThreePlus;
    std::vector<CorpusRow> rows{
        showcase(five, 1, {"26979", "24378", "221996", "198628", "128524"}, "11684", "255463"),
        showcase(five, 2, {"315", "560", "924", "396", "264"}, "132", "965"),
        showcase(five, 3, {"16", "15", "220", "176", "88"}, "44", "241"),
        showcase(five, 4, {"10416", "3689", "10360", "4440", "2960"}, "148", "12439"),
        showcase(five, 5,
                 {"206807355454175", "66669098675328", "133221414581640", "84777263824680", "60555188446200"},
                 "12111037689240", "217287944875297"),
        showcase(five, 6, {"1421", "2262", "4144", "3472", "1232"}, "112", "4663"),
        showcase(five, 7, {"6", "9", "20", "12", "8"}, "4", "21"),
        // Role order of A and B is not recoverable from the printed line.
        showcase(five, 8, {"409346", "17856675", "3529680", "2647260", "1764840"}, "882420", "17866279", false),
        showcase(five, 9,
                 {"632907528785561577532579698212415075", "17547363660052143402393127334645814",
                  "132793539889388930571722711937075840", "110661283241157442143102259947563200",
                  "66396769944694465285861355968537920"},
                 "11066128324115744214310225994756320", "633380905148771673201251847502446439"),
        showcase(three, 3, {"8", "56", "11"}, "22", "57"),
        showcase(three, 7,
                 {"5129496674953832213892839", "31856062007258755695495000", "15201651200677671668018850"},
                 "323439387248461099319550", "32266397734309870798607161"),
        showcase(three, 8, {"136268507232", "201049446673", "483363968776"}, "26291763992", "487694040337"),
        showcase(three, 9, {"414", "115", "264"}, "132", "439"),
    };
    CorpusRow k2{CorpusSource::Showcase, "showcase three_plus/2", solution(three, 2, {"49", "280", "1200"}, "140", "1201"),
                 false, "three_plus/2:pq-identity"};
    rows.push_back(std::move(k2));
    return rows;
}

CorpusRow k14_row() {
    return {CorpusSource::K14, "k14 witness", solution(Variant::ThreePlus, 14, {"4", "11", "15"}, "1", "16"), true,
            ""};
}

}  // namespace quartic
