#pragma once

// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.

#include <array>

namespace oracle {

// x, Gamma(x), log Gamma(x), digamma(x)
inline constexpr std::array<std::array<double, 4>, 7> gamma_table{{
    {0.1, 9.5135076986687318363, 2.2527126517342059599, -10.423754940411076795},
    {0.5, 1.7724538509055160273, 0.57236494292470008707, -1.9635100260214234794},
    {1.0, 1.0, 0.0, -0.57721566490153286061},
    {2.5, 1.3293403881791370205, 0.28468287047291915963, 0.70315664064524318723},
    {7.3, 1271.4236336639092731, 7.1478925230222490328, 1.9178203356379860984},
    {33.3, 7.487577596522706608e+35, 82.603723581654952928, 3.4904672385202428639},
    {150.5, 4.6610726270973779184e+261, 602.51395487058541195, 5.0106371459337046472},
}};

// nu, z, exp(-z) I_nu(z)
inline constexpr std::array<std::array<double, 3>, 42> bessel_i_scaled_table{{
    {-0.5, 0.001, 25.206119109494142682},
    {-0.5, 0.5, 0.77174333225805363862},
    {-0.5, 5.0, 0.17842051152623320057},
    {-0.5, 30.0, 0.072836562039471938036},
    {-0.5, 200.0, 0.028209479177387814347},
    {-0.5, 650.0, 0.015647803635108535614},
    {0.0, 0.001, 0.9990007495835155594},
    {0.0, 0.5, 0.64503527044915006811},
    {0.0, 5.0, 0.18354081260932835307},
    {0.0, 30.0, 0.073145946482237293929},
    {0.0, 200.0, 0.02822715994911191567},
    {0.0, 650.0, 0.015650815436407734124},
    {0.5, 0.001, 0.025206110707457800332},
    {0.5, 0.5, 0.35663583483745893528},
    {0.5, 5.0, 0.17840431170432102234},
    {0.5, 30.0, 0.072836562039471938036},
    {0.5, 200.0, 0.028209479177387814347},
    {0.5, 650.0, 0.015647803635108535614},
    {1.5, 0.001, 8.4020363423501932912e-6},
    {1.5, 0.5, 0.058471662583135768062},
    {1.5, 5.0, 0.1427396491853689961},
    {1.5, 30.0, 0.070408676638156206768},
    {1.5, 200.0, 0.028068431781500875276},
    {1.5, 650.0, 0.015623730091054522483},
    {2.3, 0.001, 9.5171142501033310699e-9},
    {2.3, 0.5, 0.0094979648813233734049},
    {2.3, 5.0, 0.10270848273107944602},
    {2.3, 30.0, 0.066874138937849198375},
    {2.3, 200.0, 0.027855391494887491779},
    {2.3, 650.0, 0.015587209253347624207},
    {5.0, 0.001, 2.6015639100479077119e-19},
    {5.0, 0.5, 4.9876055214701639354e-6},
    {5.0, 5.0, 0.014540318125234771271},
    {5.0, 30.0, 0.047925203168721224039},
    {5.0, 200.0, 0.026512884809718938208},
    {5.0, 650.0, 0.015352487739311764567},
    {12.7, 0.001, 4.1675087895862430647e-52},
    {12.7, 0.5, 4.8090975684360413655e-18},
    {12.7, 5.0, 4.1775668448836859721e-7},
    {12.7, 30.0, 0.0049523449976312468103},
    {12.7, 200.0, 0.018843790640870365927},
    {12.7, 650.0, 0.013823390994881871398},
}};

// nu, z, J_nu(z)
inline constexpr std::array<std::array<double, 3>, 30> bessel_j_table{{
    {-0.5, 0.01, 7.9784466690727600478},
    {-0.5, 0.7, 0.72939515852456278186},
    {-0.5, 3.0, -0.45604882079463317885},
    {-0.5, 17.5, 0.041853979661221729176},
    {-0.5, 60.0, -0.098104683735037915465},
    {-0.5, 99.0, 0.0031932529475604240458},
    {0.0, 0.01, 0.99997500015624956597},
    {0.0, 0.7, 0.88120088860740528084},
    {0.0, 3.0, -0.26005195490193343762},
    {0.0, 17.5, -0.10311039822868592217},
    {0.0, 60.0, -0.091471804089061869531},
    {0.0, 99.0, -0.05447423527049907344},
    {0.5, 0.01, 0.079787126279334219655},
    {0.5, 0.7, 0.61436106679126508322},
    {0.5, 3.0, 0.065008182877375778114},
    {0.5, 17.5, -0.18608201711405906758},
    {0.5, 60.0, -0.031397461182520413009},
    {0.5, 99.0, -0.080126811285615172656},
    {1.3, 0.01, 0.00087436477991821323698},
    {1.3, 0.7, 0.20749331935256302375},
    {1.3, 3.0, 0.43968760239415816418},
    {1.3, 17.5, -0.10408671632884226729},
    {1.3, 60.0, 0.082880989862679679182},
    {1.3, 99.0, -0.028344832931156352249},
    {3.0, 0.01, 2.0833203125325520381e-8},
    {3.0, 0.7, 0.0069296548267508408077},
    {3.0, 3.0, 0.30906272225525164362},
    {3.0, 17.5, 0.18271913063588380485},
    {3.0, 60.0, -0.040396711521655156971},
    {3.0, 99.0, 0.061275663053705945473},
}};

// a, b, c, z, 2F1(a, b; c; z) with a = (l+1)/2, b = (l+2)/2, c = l + 1/2
inline constexpr std::array<std::array<double, 5>, 24> hyp2f1_table{{
    {0.75, 1.25, 1.0, 0.3, 1.399603687242744155},
    {0.75, 1.25, 1.0, 0.5, 1.9279044140412958749},
    {0.75, 1.25, 1.0, 0.7, 3.1507704566101307126},
    {0.75, 1.25, 1.0, 0.9, 9.2058925138209276819},
    {0.75, 1.25, 1.0, 0.99, 90.357335496305559589},
    {0.75, 1.25, 1.0, 0.999999, 900317.15876316682632},
    {1.65, 2.15, 2.8, 0.3, 1.562487160983089251},
    {1.65, 2.15, 2.8, 0.5, 2.3565708123683042237},
    {1.65, 2.15, 2.8, 0.7, 4.3206104242645929291},
    {1.65, 2.15, 2.8, 0.9, 14.94700193358782088},
    {1.65, 2.15, 2.8, 0.99, 168.59537628581559241},
    {1.65, 2.15, 2.8, 0.999999, 1735799.4502916904871},
    {2.0, 2.5, 3.5, 0.3, 1.6502625803366518584},
    {2.0, 2.5, 3.5, 0.5, 2.6064855915861691964},
    {2.0, 2.5, 3.5, 0.7, 5.0759495712026682414},
    {2.0, 2.5, 3.5, 0.9, 19.28878822764859731},
    {2.0, 2.5, 3.5, 0.99, 237.15716138770417372},
    {2.0, 2.5, 3.5, 0.999999, 2499952.9931084112943},
    {3.0, 3.5, 5.5, 0.3, 1.9425507515626431347},
    {3.0, 3.5, 5.5, 0.5, 3.5245429141012710897},
    {3.0, 3.5, 5.5, 0.7, 8.2436762440700413379},
    {3.0, 3.5, 5.5, 0.9, 41.940984098251286586},
    {3.0, 3.5, 5.5, 0.99, 684.95696462623765715},
    {3.0, 3.5, 5.5, 0.999999, 7874541.8638439924645},
}};

// lambda, t, x, y, W_t(x, y), P_t(x, y)
inline constexpr std::array<std::array<double, 6>, 8> kernel_table{{
    {0.5, 1.0, 1.0, 1.0, 0.32251763522457503405, 0.33552199437243954915},
    {0.5, 0.1, 0.3, 0.35, 3.1454037262941152498, 8.0442521927622867064},
    {2.3, 0.25, 1.0, 1.5, 0.096328851163940520444, 0.06747446189587936389},
    {2.3, 3.0, 0.05, 7.0, 0.000019124657437037918956, 8.2143386212263060754e-6},
    {-0.3, 0.7, 2.0, 0.4, 0.11413921924983872648, 0.091452757784612806402},
    {1.7, 0.02, 5.0, 5.1, 0.0071461033579850326776, 0.0024844469720265971323},
    {4.0, 10.0, 20.0, 0.5, 4.8582615945195650093e-13, 7.4515108210366303261e-13},
    {0.5, 0.01, 3.0, 3.3, 0.094520207799572262069, 0.011265454646708106332},
}};

// lambda, t, x, int W_t(x,y) exp(-y^2) y^{2 lambda} dy
inline constexpr std::array<std::array<double, 4>, 3> heat_gauss_table{{
    {1.0, 0.5, 1.0, 0.13789651501419085521},
    {0.5, 0.1, 2.0, 0.041023299476869535781},
    {2.3, 1.0, 0.3, 0.010840933669408924129},
}};

// lambda, sigma, scaffold norm for p = 2, a = 1
inline constexpr std::array<std::array<double, 3>, 4> scaffold_table{{
    {0.0, 0.25, 1.2878805090895792326},
    {1.0, 0.25, 0.86936432305697020492},
    {1.0, 0.0625, 0.71423651419252868504},
    {2.3, 0.1, 1.172005150726951438},
}};

}  // namespace oracle
