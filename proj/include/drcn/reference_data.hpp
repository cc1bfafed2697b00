#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace drcn {

// Reference curve coordinates for the two comparison figures, as plotted.
// fig3: abscissa is the D2D gain h3 (h1=0.15, h2=1, P=100).
// fig4: abscissa is SNR2 = h2^2 P, linear scale (h1=0.5, h2=1, h3=2).
// The upper_bound curve is external reference data; its formula is not
// part of this library and it is never recomputed.
struct ReferenceRow {
    std::string_view figure;
    std::string_view curve;
    double abscissa;
    double value;
};

inline constexpr ReferenceRow kReferenceCurves[] = {
    {"fig3", "r_nocoop", 0.01, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0125892541179417, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0158489319246111, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0199526231496888, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0251188643150958, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0316227766016838, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0398107170553497, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0501187233627272, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0630957344480193, 0.425960149394344},
    {"fig3", "r_nocoop", 0.0794328234724281, 0.425960149394344},
    {"fig3", "r_nocoop", 0.1, 0.425960149394344},
    {"fig3", "r_nocoop", 0.125892541179417, 0.425960149394344},
    {"fig3", "r_nocoop", 0.158489319246111, 0.425960149394344},
    {"fig3", "r_nocoop", 0.199526231496888, 0.425960149394344},
    {"fig3", "r_nocoop", 0.251188643150958, 0.425960149394344},
    {"fig3", "r_nocoop", 0.316227766016838, 0.425960149394344},
    {"fig3", "r_nocoop", 0.398107170553497, 0.425960149394344},
    {"fig3", "r_nocoop", 0.501187233627272, 0.425960149394344},
    {"fig3", "r_nocoop", 0.630957344480193, 0.425960149394344},
    {"fig3", "r_nocoop", 0.794328234724281, 0.425960149394344},
    {"fig3", "r_nocoop", 1, 0.425960149394344},
    {"fig3", "r_nocoop", 1.25892541179417, 0.425960149394344},
    {"fig3", "r_nocoop", 1.58489319246111, 0.425960149394344},
    {"fig3", "r_nocoop", 1.99526231496888, 0.425960149394344},
    {"fig3", "r_nocoop", 2.51188643150958, 0.425960149394344},
    {"fig3", "r_nocoop", 3.16227766016838, 0.425960149394344},
    {"fig3", "r_nocoop", 3.98107170553497, 0.425960149394344},
    {"fig3", "r_nocoop", 5.01187233627272, 0.425960149394344},
    {"fig3", "r_nocoop", 6.30957344480193, 0.425960149394344},
    {"fig3", "r_nocoop", 7.94328234724282, 0.425960149394344},
    {"fig3", "r_nocoop", 10, 0.425960149394344},
    {"fig3", "r_sep", 0.01, 0.437526769057454},
    {"fig3", "r_sep", 0.0125892541179417, 0.443121967042547},
    {"fig3", "r_sep", 0.0158489319246111, 0.450187701976162},
    {"fig3", "r_sep", 0.0199526231496888, 0.45910906837699},
    {"fig3", "r_sep", 0.0251188643150958, 0.470366291636777},
    {"fig3", "r_sep", 0.0316227766016838, 0.48147631915181},
    {"fig3", "r_sep", 0.0398107170553497, 0.495701752517763},
    {"fig3", "r_sep", 0.0501187233627272, 0.510982135301398},
    {"fig3", "r_sep", 0.0630957344480193, 0.510982135301398},
    {"fig3", "r_sep", 0.0794328234724281, 0.510982135301398},
    {"fig3", "r_sep", 0.1, 0.510982135301398},
    {"fig3", "r_sep", 0.125892541179417, 0.510982135301398},
    {"fig3", "r_sep", 0.158489319246111, 0.544579980485838},
    {"fig3", "r_sep", 0.199526231496888, 0.652610024625653},
    {"fig3", "r_sep", 0.251188643150958, 0.718881698402157},
    {"fig3", "r_sep", 0.316227766016838, 0.813084901146679},
    {"fig3", "r_sep", 0.398107170553497, 0.813084901146679},
    {"fig3", "r_sep", 0.501187233627272, 0.813084901146679},
    {"fig3", "r_sep", 0.630957344480193, 0.813084901146679},
    {"fig3", "r_sep", 0.794328234724281, 0.813084901146679},
    {"fig3", "r_sep", 1, 0.813084901146679},
    {"fig3", "r_sep", 1.25892541179417, 0.813084901146679},
    {"fig3", "r_sep", 1.58489319246111, 0.813084901146679},
    {"fig3", "r_sep", 1.99526231496888, 0.813084901146679},
    {"fig3", "r_sep", 2.51188643150958, 0.813084901146679},
    {"fig3", "r_sep", 3.16227766016838, 0.813084901146679},
    {"fig3", "r_sep", 3.98107170553497, 0.813084901146679},
    {"fig3", "r_sep", 5.01187233627272, 0.813084901146679},
    {"fig3", "r_sep", 6.30957344480193, 0.813084901146679},
    {"fig3", "r_sep", 7.94328234724282, 0.813084901146679},
    {"fig3", "r_sep", 10, 0.813084901146679},
    {"fig3", "r_sim", 0.01, 0.676775007820155},
    {"fig3", "r_sim", 0.0125892541179417, 0.676775007820155},
    {"fig3", "r_sim", 0.0158489319246111, 0.676775007820155},
    {"fig3", "r_sim", 0.0199526231496888, 0.676775007820155},
    {"fig3", "r_sim", 0.0251188643150958, 0.676775007820155},
    {"fig3", "r_sim", 0.0316227766016838, 0.676775007820155},
    {"fig3", "r_sim", 0.0398107170553497, 0.676775007820155},
    {"fig3", "r_sim", 0.0501187233627272, 0.676775007820155},
    {"fig3", "r_sim", 0.0630957344480193, 0.676775007820155},
    {"fig3", "r_sim", 0.0794328234724281, 0.676775007820155},
    {"fig3", "r_sim", 0.1, 0.676775007820155},
    {"fig3", "r_sim", 0.125892541179417, 0.676775007820155},
    {"fig3", "r_sim", 0.158489319246111, 0.731715857185719},
    {"fig3", "r_sim", 0.199526231496888, 0.865833600961574},
    {"fig3", "r_sim", 0.251188643150958, 1.00206082815415},
    {"fig3", "r_sim", 0.316227766016838, 1.13815300253167},
    {"fig3", "r_sim", 0.398107170553497, 1.26312142282068},
    {"fig3", "r_sim", 0.501187233627272, 1.37824977692962},
    {"fig3", "r_sim", 0.630957344480193, 1.48219269472686},
    {"fig3", "r_sim", 0.794328234724281, 1.57799612141218},
    {"fig3", "r_sim", 1, 1.66276292279473},
    {"fig3", "r_sim", 1.25892541179417, 1.66276292279473},
    {"fig3", "r_sim", 1.58489319246111, 1.66276292279473},
    {"fig3", "r_sim", 1.99526231496888, 1.66276292279473},
    {"fig3", "r_sim", 2.51188643150958, 1.66276292279473},
    {"fig3", "r_sim", 3.16227766016838, 1.66276292279473},
    {"fig3", "r_sim", 3.98107170553497, 1.66276292279473},
    {"fig3", "r_sim", 5.01187233627272, 1.66276292279473},
    {"fig3", "r_sim", 6.30957344480193, 1.66276292279473},
    {"fig3", "r_sim", 7.94328234724282, 1.66276292279473},
    {"fig3", "r_sim", 10, 1.66276292279473},
    {"fig3", "upper_bound", 0.01, 0.852435982228176},
    {"fig3", "upper_bound", 0.0125892541179417, 0.853729028915227},
    {"fig3", "upper_bound", 0.0158489319246111, 0.855773633759552},
    {"fig3", "upper_bound", 0.0199526231496888, 0.859002289636591},
    {"fig3", "upper_bound", 0.0251188643150958, 0.864089945901722},
    {"fig3", "upper_bound", 0.0316227766016838, 0.872080547785205},
    {"fig3", "upper_bound", 0.0398107170553497, 0.884566231129213},
    {"fig3", "upper_bound", 0.0501187233627272, 0.903922397950681},
    {"fig3", "upper_bound", 0.0630957344480193, 0.933574056110289},
    {"fig3", "upper_bound", 0.0794328234724281, 0.978206288289962},
    {"fig3", "upper_bound", 0.1, 1.04373142062517},
    {"fig3", "upper_bound", 0.125892541179417, 1.13674200975192},
    {"fig3", "upper_bound", 0.158489319246111, 1.26327061241545},
    {"fig3", "upper_bound", 0.199526231496888, 1.42710474127002},
    {"fig3", "upper_bound", 0.251188643150958, 1.62847312276419},
    {"fig3", "upper_bound", 0.316227766016838, 1.67249949285486},
    {"fig3", "upper_bound", 0.398107170553497, 1.67249949285486},
    {"fig3", "upper_bound", 0.501187233627272, 1.67249949285486},
    {"fig3", "upper_bound", 0.630957344480193, 1.67249949285486},
    {"fig3", "upper_bound", 0.794328234724281, 1.67249949285486},
    {"fig3", "upper_bound", 1, 1.67249949285486},
    {"fig3", "upper_bound", 1.25892541179417, 1.67249949285486},
    {"fig3", "upper_bound", 1.58489319246111, 1.67249949285486},
    {"fig3", "upper_bound", 1.99526231496888, 1.67249949285486},
    {"fig3", "upper_bound", 2.51188643150958, 1.67249949285486},
    {"fig3", "upper_bound", 3.16227766016838, 1.67249949285486},
    {"fig3", "upper_bound", 3.98107170553497, 1.67249949285486},
    {"fig3", "upper_bound", 5.01187233627272, 1.67249949285486},
    {"fig3", "upper_bound", 6.30957344480193, 1.67249949285486},
    {"fig3", "upper_bound", 7.94328234724282, 1.67249949285486},
    {"fig3", "upper_bound", 10, 1.67249949285486},
    {"fig4", "upper_bound", 0.1, 0.0424812503605781},
    {"fig4", "upper_bound", 0.125892541179417, 0.0527111911079887},
    {"fig4", "upper_bound", 0.158489319246111, 0.0651905888923648},
    {"fig4", "upper_bound", 0.199526231496888, 0.080311107363757},
    {"fig4", "upper_bound", 0.251188643150958, 0.0984874222830448},
    {"fig4", "upper_bound", 0.316227766016838, 0.120139883420344},
    {"fig4", "upper_bound", 0.398107170553497, 0.145671264424369},
    {"fig4", "upper_bound", 0.501187233627272, 0.175439166924116},
    {"fig4", "upper_bound", 0.630957344480193, 0.209727190545796},
    {"fig4", "upper_bound", 0.794328234724281, 0.248719192951674},
    {"fig4", "upper_bound", 1, 0.292481250360578},
    {"fig4", "upper_bound", 1.25892541179417, 0.340954915407706},
    {"fig4", "upper_bound", 1.58489319246111, 0.393963187852168},
    {"fig4", "upper_bound", 1.99526231496888, 0.451227942677442},
    {"fig4", "upper_bound", 2.51188643150958, 0.512395324214732},
    {"fig4", "upper_bound", 3.16227766016838, 0.577064519202225},
    {"fig4", "upper_bound", 3.98107170553497, 0.644815534495049},
    {"fig4", "upper_bound", 5.01187233627272, 0.715232776983065},
    {"fig4", "upper_bound", 6.30957344480193, 0.787922774880995},
    {"fig4", "upper_bound", 7.94328234724282, 0.862525770916087},
    {"fig4", "upper_bound", 10, 0.938721875540867},
    {"fig4", "upper_bound", 12.5892541179417, 1.01623294593039},
    {"fig4", "upper_bound", 15.8489319246111, 1.09482145428294},
    {"fig4", "upper_bound", 19.9526231496888, 1.17428747391835},
    {"fig4", "upper_bound", 25.1188643150958, 1.25446467373085},
    {"fig4", "upper_bound", 31.6227766016838, 1.33521595863651},
    {"fig4", "upper_bound", 39.8107170553497, 1.41642917266028},
    {"fig4", "upper_bound", 50.1187233627272, 1.4980131095328},
    {"fig4", "upper_bound", 63.0957344480193, 1.57989395317847},
    {"fig4", "upper_bound", 79.4328234724281, 1.66201218944788},
    {"fig4", "upper_bound", 100, 1.74431998087498},
    {"fig4", "upper_bound", 125.892541179417, 1.82677896881989},
    {"fig4", "upper_bound", 158.489319246111, 1.90935845459937},
    {"fig4", "upper_bound", 199.526231496888, 1.9920339075723},
    {"fig4", "upper_bound", 251.188643150958, 2.07478574979622},
    {"fig4", "upper_bound", 316.227766016838, 2.15759837127291},
    {"fig4", "upper_bound", 398.107170553497, 2.24045933536912},
    {"fig4", "upper_bound", 501.187233627272, 2.3233587397908},
    {"fig4", "upper_bound", 630.957344480193, 2.40628870398675},
    {"fig4", "upper_bound", 794.328234724281, 2.48924295880619},
    {"fig4", "upper_bound", 1000, 2.57221651854146},
    {"fig4", "r_sim", 0.1, 0.0141426921630963},
    {"fig4", "r_sim", 0.125892541179417, 0.0177056558362402},
    {"fig4", "r_sim", 0.158489319246111, 0.0221715427600718},
    {"fig4", "r_sim", 0.199526231496888, 0.0276900266033626},
    {"fig4", "r_sim", 0.251188643150958, 0.0345314475899196},
    {"fig4", "r_sim", 0.316227766016838, 0.0429753454860147},
    {"fig4", "r_sim", 0.398107170553497, 0.0533158347811064},
    {"fig4", "r_sim", 0.501187233627272, 0.0659366917251016},
    {"fig4", "r_sim", 0.630957344480193, 0.0812488751420586},
    {"fig4", "r_sim", 0.794328234724281, 0.129046905256159},
    {"fig4", "r_sim", 1, 0.1845},
    {"fig4", "r_sim", 1.25892541179417, 0.240417691794594},
    {"fig4", "r_sim", 1.58489319246111, 0.298682818005715},
    {"fig4", "r_sim", 1.99526231496888, 0.35947968024854},
    {"fig4", "r_sim", 2.51188643150958, 0.423159485668696},
    {"fig4", "r_sim", 3.16227766016838, 0.489721817266047},
    {"fig4", "r_sim", 3.98107170553497, 0.559353625530274},
    {"fig4", "r_sim", 5.01187233627272, 0.630410873169438},
    {"fig4", "r_sim", 6.30957344480193, 0.704345147410846},
    {"fig4", "r_sim", 7.94328234724282, 0.779138290494561},
    {"fig4", "r_sim", 10, 0.856209325612731},
    {"fig4", "r_sim", 12.5892541179417, 0.93356980302663},
    {"fig4", "r_sim", 15.8489319246111, 1.012534430874},
    {"fig4", "r_sim", 19.9526231496888, 1.0928756828734},
    {"fig4", "r_sim", 25.1188643150958, 1.17212322162782},
    {"fig4", "r_sim", 31.6227766016838, 1.25388393624757},
    {"fig4", "r_sim", 39.8107170553497, 1.33504360048503},
    {"fig4", "r_sim", 50.1187233627272, 1.41610708550032},
    {"fig4", "r_sim", 63.0957344480193, 1.49771452446613},
    {"fig4", "r_sim", 79.4328234724281, 1.58017903635881},
    {"fig4", "r_sim", 100, 1.66276292279473},
    {"fig4", "r_sim", 125.892541179417, 1.74544187945975},
    {"fig4", "r_sim", 158.489319246111, 1.82819650990876},
    {"fig4", "r_sim", 199.526231496888, 1.91101134940484},
    {"fig4", "r_sim", 251.188643150958, 1.99387407739335},
    {"fig4", "r_sim", 316.227766016838, 2.07677488422435},
    {"fig4", "r_sim", 398.107170553497, 2.15970596321479},
    {"fig4", "r_sim", 501.187233627272, 2.24266110406562},
    {"fig4", "r_sim", 630.957344480193, 2.32563536792814},
    {"fig4", "r_sim", 794.328234724281, 2.40862482805069},
    {"fig4", "r_sim", 1000, 2.49162636297644},
    {"fig4", "r_sep", 0.1, 0.031093659727998},
    {"fig4", "r_sep", 0.158489319246111, 0.046291095767607},
    {"fig4", "r_sep", 0.251188643150958, 0.069360961874892},
    {"fig4", "r_sep", 0.398107170553497, 0.100339665189072},
    {"fig4", "r_sep", 0.630957344480193, 0.138158957735719},
    {"fig4", "r_sep", 1, 0.186472119473808},
    {"fig4", "r_sep", 1.58489319246111, 0.243460395528974},
    {"fig4", "r_sep", 2.51188643150958, 0.310599292669899},
    {"fig4", "r_sep", 3.98107170553497, 0.379462992927842},
    {"fig4", "r_sep", 6.30957344480193, 0.442877808434556},
    {"fig4", "r_sep", 10, 0.531838239123287},
    {"fig4", "r_sep", 15.8489319246111, 0.6255},
    {"fig4", "r_sep", 25.1188643150958, 0.686684899040295},
    {"fig4", "r_sep", 39.8107170553497, 0.79},
    {"fig4", "r_sep", 63.0957344480193, 0.8547},
    {"fig4", "r_sep", 100, 0.92865939316468},
    {"fig4", "r_sep", 158.489319246111, 1.00824841686991},
    {"fig4", "r_sep", 251.188643150958, 1.0966},
    {"fig4", "r_sep", 398.107170553497, 1.1763},
    {"fig4", "r_sep", 630.957344480193, 1.2552},
    {"fig4", "r_sep", 1000, 1.3029},
    {"fig4", "r_nocoop", 0.1, 0.01280669802487},
    {"fig4", "r_nocoop", 0.158489319246111, 0.019555998023463},
    {"fig4", "r_nocoop", 0.251188643150958, 0.029649950302209},
    {"fig4", "r_nocoop", 0.398107170553497, 0.045642194947436},
    {"fig4", "r_nocoop", 0.630957344480193, 0.068730720691446},
    {"fig4", "r_nocoop", 1, 0.098861608480291},
    {"fig4", "r_nocoop", 1.58489319246111, 0.142622779398266},
    {"fig4", "r_nocoop", 2.51188643150958, 0.197961090369751},
    {"fig4", "r_nocoop", 3.98107170553497, 0.254007650931189},
    {"fig4", "r_nocoop", 6.30957344480193, 0.333857440150577},
    {"fig4", "r_nocoop", 10, 0.425435126420902},
    {"fig4", "r_nocoop", 15.8489319246111, 0.514592165876774},
    {"fig4", "r_nocoop", 25.1188643150958, 0.589688498638686},
    {"fig4", "r_nocoop", 39.8107170553497, 0.66742898161923},
    {"fig4", "r_nocoop", 63.0957344480193, 0.745949739386299},
    {"fig4", "r_nocoop", 100, 0.849146890331373},
    {"fig4", "r_nocoop", 158.489319246111, 0.91},
    {"fig4", "r_nocoop", 251.188643150958, 0.983854860630457},
    {"fig4", "r_nocoop", 398.107170553497, 1.0457},
    {"fig4", "r_nocoop", 630.957344480193, 1.0852},
    {"fig4", "r_nocoop", 1000, 1.1601},
};

inline std::span<const ReferenceRow> reference_curves() {
    return kReferenceCurves;
}

inline std::vector<ReferenceRow> reference_rows(std::string_view figure,
                                                std::string_view curve) {
    std::vector<ReferenceRow> out;
    for (const ReferenceRow& r : kReferenceCurves) {
        if (r.figure == figure && r.curve == curve) out.push_back(r);
    }
    return out;
}

}  // namespace drcn
