//! Reference values of `E₁(x) = Γ(0, x)` and `W_{κ,μ}(z)`, computed once at
//! 40 significant digits with an arbitrary-precision library and rounded to
//! 17 digits.
#![allow(clippy::excessive_precision)]

/// `(x, E₁(x))`.
pub const E1_TABLE: &[(f64, f64)] = &[
    (1e-8, 1.7843465089050833e+1),
    (1e-4, 8.6332247045747054),
    (0.01, 4.0379295765381138),
    (0.1, 1.8229239584193907),
    (0.5, 5.5977359477616081e-1),
    (0.999, 2.1975218202294454e-1),
    (1.0, 2.1938393439552027e-1),
    (1.001, 2.1901642252746886e-1),
    (2.0, 4.890051070806112e-2),
    (5.0, 1.1482955912753258e-3),
    (10.0, 4.1569689296853243e-6),
    (30.0, 3.0215520106888125e-15),
    (80.0, 2.2285432586884729e-37),
    (200.0, 6.8852261063076356e-90),
];

/// `(κ, μ, z, W_{κ,μ}(z))` on the half-integer lattice.
pub const WHITTAKER_TABLE: &[(f64, f64, f64, f64)] = &[
    (-3.5, 0.0, 0.05, 3.9726583211114371e-2),
    (-3.5, 0.0, 0.5, 1.2016970882173191e-2),
    (-3.5, 0.0, 1.0, 4.6468726314362925e-3),
    (-3.5, 0.0, 3.0, 3.2279454498443379e-4),
    (-3.5, 0.0, 10.0, 6.5969547354123776e-7),
    (-3.5, 0.0, 25.0, 2.7498294006597357e-11),
    (-3.5, 0.5, 0.05, 5.7765926683619862e-2),
    (-3.5, 0.5, 0.5, 1.3691591123206704e-2),
    (-3.5, 0.5, 1.0, 5.0799975642419073e-3),
    (-3.5, 0.5, 3.0, 3.3766309128497344e-4),
    (-3.5, 0.5, 10.0, 6.7211801808607764e-7),
    (-3.5, 0.5, 25.0, 2.7737159986206918e-11),
    (-3.5, 1.0, 0.05, 1.6018579899571189e-1),
    (-3.5, 1.0, 0.5, 2.0061932303012072e-2),
    (-3.5, 1.0, 1.0, 6.6123796727435283e-3),
    (-3.5, 1.0, 3.0, 3.8624412015582731e-4),
    (-3.5, 1.0, 10.0, 7.1075885122940842e-7),
    (-3.5, 1.0, 25.0, 2.8466046723024547e-11),
    (-3.5, 1.5, 0.05, 7.0211925132167268e-1),
    (-3.5, 1.5, 0.5, 3.6906586216473607e-2),
    (-3.5, 1.5, 1.0, 1.0144563868314828e-2),
    (-3.5, 1.5, 3.0, 4.8218158055218887e-4),
    (-3.5, 1.5, 10.0, 7.7998537550895084e-7),
    (-3.5, 1.5, 25.0, 2.9722861155260602e-11),
    (-3.5, 2.5, 0.05, 3.1925825967756529e+1),
    (-3.5, 2.5, 0.5, 2.1905804888223744e-1),
    (-3.5, 2.5, 1.0, 3.6882308948340744e-2),
    (-3.5, 2.5, 3.0, 9.6423953846943116e-4),
    (-3.5, 2.5, 10.0, 1.0482252369135158e-6),
    (-3.5, 2.5, 25.0, 3.4122039191586696e-11),
    (-2.0, 0.0, 0.05, 2.4605665095041118e-1),
    (-2.0, 0.0, 0.5, 1.1564520153994132e-1),
    (-2.0, 0.0, 1.0, 5.7663451119420925e-2),
    (-2.0, 0.0, 3.0, 7.289050252742226e-3),
    (-2.0, 0.0, 10.0, 4.094362224219915e-5),
    (-2.0, 0.0, 25.0, 4.7610317171139179e-9),
    (-2.0, 0.5, 0.05, 3.8235605496020582e-1),
    (-2.0, 0.5, 0.5, 1.3487338525151938e-1),
    (-2.0, 0.5, 1.0, 6.3976221080969821e-2),
    (-2.0, 0.5, 3.0, 7.6694182808443956e-3),
    (-2.0, 0.5, 10.0, 4.1775026218732715e-5),
    (-2.0, 0.5, 25.0, 4.8041770922218168e-9),
    (-2.0, 1.0, 0.05, 1.2290002120436126),
    (-2.0, 1.0, 0.5, 2.1066853413589758e-1),
    (-2.0, 1.0, 1.0, 8.6838716778431672e-2),
    (-2.0, 1.0, 3.0, 8.9244796479093272e-3),
    (-2.0, 1.0, 10.0, 4.4367891687126399e-5),
    (-2.0, 1.0, 25.0, 4.9359252351899099e-9),
    (-2.0, 1.5, 0.05, 6.3465876884359865),
    (-2.0, 1.5, 0.5, 4.2435197665485055e-1),
    (-2.0, 1.5, 1.0, 1.4189306005624852e-1),
    (-2.0, 1.5, 3.0, 1.145077966276576e-2),
    (-2.0, 1.5, 10.0, 4.9037212833456127e-5),
    (-2.0, 1.5, 25.0, 5.1634158157017173e-9),
    (-2.0, 2.5, 0.05, 3.9012396481133307e+2),
    (-2.0, 2.5, 0.5, 3.1152031322856195),
    (-2.0, 2.5, 1.0, 6.0653065971263342e-1),
    (-2.0, 2.5, 3.0, 2.4792240016492203e-2),
    (-2.0, 2.5, 10.0, 6.7379469990854671e-5),
    (-2.0, 2.5, 25.0, 5.9626450753258736e-9),
    (-1.5, 0.0, 0.05, 3.7601325695160326e-1),
    (-1.5, 0.0, 0.5, 2.116685271715029e-1),
    (-1.5, 0.0, 1.0, 1.1687525846291805e-1),
    (-1.5, 0.0, 3.0, 1.8680146470846696e-2),
    (-1.5, 0.0, 10.0, 1.5334138469157262e-4),
    (-1.5, 0.0, 25.0, 2.5754340468763974e-8),
    (-1.5, 0.5, 0.05, 6.0450209494663474e-1),
    (-1.5, 0.5, 0.5, 2.4975261334444092e-1),
    (-1.5, 0.5, 1.0, 1.3060161526694779e-1),
    (-1.5, 0.5, 3.0, 1.9706622388224947e-2),
    (-1.5, 0.5, 10.0, 1.5654632886310608e-4),
    (-1.5, 0.5, 25.0, 2.5991327561519489e-8),
    (-1.5, 1.0, 0.05, 2.085961517950935),
    (-1.5, 1.0, 0.5, 4.0240829779737298e-1),
    (-1.5, 1.0, 1.0, 1.8085147954388787e-1),
    (-1.5, 1.0, 3.0, 2.3108087179820045e-2),
    (-1.5, 1.0, 10.0, 1.665518079080173e-4),
    (-1.5, 1.0, 25.0, 2.6715175887208338e-8),
    (-1.5, 1.5, 0.05, 1.1597014168911329e+1),
    (-1.5, 1.5, 0.5, 8.4561320962493232e-1),
    (-1.5, 1.5, 1.0, 3.0427904882381114e-1),
    (-1.5, 1.5, 3.0, 3.001172384242052e-2),
    (-1.5, 1.5, 10.0, 1.8460704740530012e-4),
    (-1.5, 1.5, 25.0, 2.7965697655595453e-8),
    (-1.5, 2.5, 0.05, 8.0996156062967808e+2),
    (-1.5, 2.5, 0.5, 6.8143496745617515),
    (-1.5, 2.5, 1.0, 1.3971436258074103),
    (-1.5, 2.5, 3.0, 6.7255151506385564e-2),
    (-1.5, 2.5, 10.0, 2.5591824038488702e-4),
    (-1.5, 2.5, 25.0, 3.2365099075241677e-8),
    (-0.5, 0.0, 0.05, 5.6580874589911659e-1),
    (-0.5, 0.0, 0.5, 5.0824256138312443e-1),
    (-0.5, 0.0, 1.0, 3.6170295908777574e-1),
    (-0.5, 0.0, 3.0, 1.0128823013722688e-1),
    (-0.5, 0.0, 10.0, 1.9509636959361924e-3),
    (-0.5, 0.0, 25.0, 7.176546231100815e-7),
    (-0.5, 0.5, 0.05, 1.0195081568434425),
    (-0.5, 0.5, 0.5, 6.2216548601974804e-1),
    (-0.5, 0.5, 1.0, 4.1299921484650087e-1),
    (-0.5, 0.5, 3.0, 1.0761730881202071e-1),
    (-0.5, 0.5, 10.0, 1.9944954348400393e-3),
    (-0.5, 0.5, 25.0, 7.2447791825862086e-7),
    (-0.5, 1.0, 0.05, 4.3617185248493833),
    (-0.5, 1.0, 0.5, 1.1013906298063675),
    (-0.5, 1.0, 1.0, 6.0653065971263342e-1),
    (-0.5, 1.0, 3.0, 1.2882425802602027e-1),
    (-0.5, 1.0, 10.0, 2.1307259270606544e-3),
    (-0.5, 1.0, 25.0, 7.453306344157342e-7),
    (-0.5, 1.5, 0.05, 2.9709792531648447e+1),
    (-0.5, 1.5, 0.5, 2.6113222034098584),
    (-0.5, 1.5, 1.0, 1.1083960292725548),
    (-0.5, 1.5, 3.0, 1.7279330722395954e-1),
    (-0.5, 1.5, 10.0, 2.3777398889217365e-3),
    (-0.5, 1.5, 25.0, 7.8139649861684974e-7),
    (-0.5, 2.5, 0.05, 2.8703737618199774e+3),
    (-0.5, 2.5, 0.5, 2.6884352669188455e+1),
    (-0.5, 2.5, 1.0, 6.1505382440103963),
    (-0.5, 2.5, 3.0, 4.2319219941751927e-1),
    (-0.5, 2.5, 10.0, 3.3657572539714912e-3),
    (-0.5, 2.5, 25.0, 9.0865719420799334e-7),
    (0.0, 0.0, 0.05, 4.8009683128663924e-1),
    (0.0, 0.0, 0.5, 6.1497221859720195e-1),
    (0.0, 0.0, 1.0, 5.2154761081954046e-1),
    (0.0, 0.0, 3.0, 2.0893186993679637e-1),
    (0.0, 0.0, 10.0, 6.5853775528567094e-3),
    (0.0, 0.0, 25.0, 3.6909386839847384e-6),
    (0.0, 0.5, 0.05, 9.7530991202833267e-1),
    (0.0, 0.5, 0.5, 7.7880078307140487e-1),
    (0.0, 0.5, 1.0, 6.0653065971263342e-1),
    (0.0, 0.5, 3.0, 2.2313016014842983e-1),
    (0.0, 0.5, 10.0, 6.7379469990854671e-3),
    (0.0, 0.5, 25.0, 3.726653172078671e-6),
    (0.0, 1.0, 0.05, 5.0394759159215489),
    (0.0, 1.0, 0.5, 1.4948470869667779),
    (0.0, 1.0, 1.0, 9.3454682566604133e-1),
    (0.0, 1.0, 3.0, 2.7106475214887961e-1),
    (0.0, 1.0, 10.0, 7.2160923885469568e-3),
    (0.0, 1.0, 25.0, 3.8358342676364626e-6),
    (0.0, 1.5, 0.05, 3.9987706393161639e+1),
    (0.0, 1.5, 0.5, 3.8940039153570243),
    (0.0, 1.5, 1.0, 1.8195919791379003),
    (0.0, 1.5, 3.0, 3.7188360024738305e-1),
    (0.0, 1.5, 10.0, 8.0855363989025605e-3),
    (0.0, 1.5, 25.0, 4.0247854258449647e-6),
    (0.0, 2.5, 0.05, 4.7995000770914251e+3),
    (0.0, 2.5, 0.5, 4.7506847767355697e+1),
    (0.0, 2.5, 1.0, 1.1524082534540035e+1),
    (0.0, 2.5, 3.0, 9.6689736064319593e-1),
    (0.0, 2.5, 10.0, 1.1589268838427003e-2),
    (0.0, 2.5, 25.0, 4.6926016742814625e-6),
    (0.5, 0.5, 0.05, 6.1710699347563856e-1),
    (0.5, 0.5, 0.5, 7.4593376902129138e-1),
    (0.5, 0.5, 1.0, 7.2804721824279089e-1),
    (0.5, 0.5, 3.0, 4.1568926845691414e-1),
    (0.5, 0.5, 10.0, 2.1822040036593103e-2),
    (0.5, 0.5, 25.0, 1.8816932379053003e-5),
    (0.5, 1.0, 0.05, 4.5798044510918524),
    (0.5, 1.0, 0.5, 1.6520859447095512),
    (0.5, 1.0, 1.0, 1.2130613194252668),
    (0.5, 1.0, 3.0, 5.1529703210408108e-1),
    (0.5, 1.0, 10.0, 2.3437985197667198e-2),
    (0.5, 1.0, 25.0, 1.9378596494809089e-5),
    (0.5, 1.5, 0.05, 4.5691549869370031e+1),
    (0.5, 1.5, 0.5, 4.973999817145953),
    (0.5, 1.5, 1.0, 2.5971408695748735),
    (0.5, 1.5, 3.0, 7.2868788369886381e-1),
    (0.5, 1.5, 10.0, 2.6385897587395727e-2),
    (0.5, 1.5, 25.0, 2.0351266086107588e-5),
    (0.5, 2.5, 0.05, 7.2661906432167862e+3),
    (0.5, 2.5, 0.5, 7.6101864795231877e+1),
    (0.5, 2.5, 1.0, 1.9636080523509697e+1),
    (0.5, 2.5, 3.0, 2.0458583430786013),
    (0.5, 2.5, 10.0, 3.836690055570706e-2),
    (0.5, 2.5, 25.0, 2.3795003819552846e-5),
    (1.0, 1.0, 0.05, 2.6577272766409792),
    (1.0, 1.0, 0.5, 1.2748783698743839),
    (1.0, 1.0, 1.0, 1.1953206310758116),
    (1.0, 1.0, 3.0, 8.5552730920295378e-1),
    (1.0, 1.0, 10.0, 7.2615395901291809e-2),
    (1.0, 1.0, 25.0, 9.6002579029083244e-5),
    (1.0, 1.5, 0.05, 4.1011781800791389e+1),
    (1.0, 1.5, 0.5, 5.0622050899641316),
    (1.0, 1.5, 1.0, 3.0326532985631671),
    (1.0, 1.5, 3.0, 1.2644042408411024),
    (1.0, 1.5, 10.0, 8.2202953388842699e-2),
    (1.0, 1.5, 25.0, 1.0091776789989041e-4),
    (1.0, 2.5, 0.05, 9.7199873487699648e+3),
    (1.0, 2.5, 0.5, 1.0786390845538957e+2),
    (1.0, 2.5, 1.0, 2.9720002325919038e+1),
    (1.0, 2.5, 3.0, 3.9419661626222603),
    (1.0, 2.5, 10.0, 1.2155256386350183e-1),
    (1.0, 2.5, 25.0, 1.1835254210014326e-4),
];
