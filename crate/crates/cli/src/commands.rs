//! Implementations of the six subcommands. Each returns `Ok(true)` when the
//! requested computation (and any verification it implies) succeeded,
//! `Ok(false)` when a verification failed, and `Err` for usage or capacity
//! errors.

use serde_json::{json, Value};

use pathtoggles::coxeter::path_to_sweep;
use pathtoggles::enumeration as en;
use pathtoggles::snakes::{reconstruct_orbit, snake_decompose, SnakeComposition};
use pathtoggles::zigzag::{
    all_ideal_orbits_with_limit, check_ideal_homomesy, ideal_orbit_of, promotion_word,
    rowmotion_word, verify_eta_equivariance, OrderIdeal,
};
use pathtoggles::{
    all_orbits_parallel_with_limit, check_homomesy, enumerate_independent_sets_with_limit,
    random_coxeter_words, CoxeterWord, HomomesyVerdict, IndependentSet, Orbit, Rat, Statistic,
    ToggleWord,
};

use crate::render::{board_text, join_usize, snake_letter};
use crate::{ConjugateArgs, CountArgs, Format, HomomesyArgs, OrbitsArgs, SnakesArgs, ZigzagArgs};

type CliResult = Result<bool, pathtoggles::Error>;

const SCHEMA_VERSION: u32 = 1;

fn guard(n: usize, max_n: usize) -> Result<(), pathtoggles::Error> {
    if n < 2 {
        return Err(pathtoggles::Error::TooSmall { n });
    }
    if n > max_n {
        return Err(pathtoggles::Error::Capacity { n, max: max_n });
    }
    Ok(())
}

fn print_json(value: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("valid json")
    );
}

fn rat_str(r: Rat) -> String {
    r.to_string()
}

// ---------------------------------------------------------------------------
// orbits
// ---------------------------------------------------------------------------

pub fn orbits(args: &OrbitsArgs) -> CliResult {
    let n = args.common.n;
    guard(n, args.common.max_n)?;
    let word = ToggleWord::parse(n, &args.word)?;
    let orbits =
        all_orbits_parallel_with_limit(n, &word, args.common.threads.max(1), args.common.max_n)?;

    match args.common.format {
        Format::Text => {
            println!("{} orbits of word {word} on n = {n}", orbits.len());
            for (idx, orbit) in orbits.iter().enumerate() {
                println!(
                    "orbit {idx}: size {} rep {} sums ({}) reversible {} symmetrical {}",
                    orbit.len(),
                    orbit.min_state(),
                    join_usize(&orbit.column_sums(), ","),
                    if orbit.is_reversible() { "yes" } else { "no" },
                    orbit.count_symmetrical(),
                );
                if args.states {
                    for s in orbit.states() {
                        println!("    {s}");
                    }
                }
            }
        }
        Format::Json => {
            let list: Vec<Value> = orbits.iter().map(|o| orbit_json(o, args.states)).collect();
            print_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "orbits",
                "n": n,
                "word": word.letters(),
                "orbit_count": orbits.len(),
                "orbits": list,
            }));
        }
        Format::Csv => {
            let states_col = if args.states { ",states" } else { "" };
            println!("orbit,size,representative,reversible,symmetrical,column_sums{states_col}");
            for (idx, orbit) in orbits.iter().enumerate() {
                let states = if args.states {
                    format!(
                        ",{}",
                        orbit
                            .states()
                            .iter()
                            .map(|s| s.to_string())
                            .collect::<Vec<_>>()
                            .join(";")
                    )
                } else {
                    String::new()
                };
                println!(
                    "{idx},{},{},{},{},{}{states}",
                    orbit.len(),
                    orbit.min_state(),
                    orbit.is_reversible(),
                    orbit.count_symmetrical(),
                    join_usize(&orbit.column_sums(), ";"),
                );
            }
        }
    }
    Ok(true)
}

fn orbit_json(orbit: &Orbit, with_states: bool) -> Value {
    let mut value = json!({
        "size": orbit.len(),
        "representative": orbit.min_state().to_string(),
        "column_sums": orbit.column_sums(),
        "reversible": orbit.is_reversible(),
        "symmetrical": orbit.count_symmetrical(),
    });
    if with_states {
        value["states"] = Value::from(
            orbit
                .states()
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>(),
        );
    }
    value
}

// ---------------------------------------------------------------------------
// homomesy
// ---------------------------------------------------------------------------

struct HomomesyCheck {
    word: ToggleWord,
    verdict: HomomesyVerdict<Orbit>,
}

pub fn homomesy(args: &HomomesyArgs) -> CliResult {
    let n = args.common.n;
    guard(n, args.common.max_n)?;
    let statistic = Statistic::parse(n, &args.statistic)?;
    let primary = ToggleWord::parse(n, &args.word)?;

    let mut checks = vec![HomomesyCheck {
        verdict: check_homomesy(n, &primary, &statistic)?,
        word: primary,
    }];
    for w in random_coxeter_words(n, args.random_words, args.common.seed) {
        checks.push(HomomesyCheck {
            verdict: check_homomesy(n, w.word(), &statistic)?,
            word: w.into_word(),
        });
    }

    let all_homomesic = checks.iter().all(|c| c.verdict.is_homomesic());
    let agree = checks
        .iter()
        .all(|c| c.verdict.constant() == checks[0].verdict.constant());

    match args.common.format {
        Format::Text => {
            for check in &checks {
                match &check.verdict {
                    HomomesyVerdict::Homomesic { constant } => {
                        println!(
                            "word {}: {} is {}-mesic",
                            check.word,
                            statistic.render(),
                            constant
                        )
                    }
                    HomomesyVerdict::NotHomomesic { first, second } => {
                        println!(
                            "word {}: {} is not homomesic (orbit at {} averages {}, orbit at {} averages {})",
                            check.word,
                            statistic.render(),
                            first.0.min_state(),
                            first.1,
                            second.0.min_state(),
                            second.1,
                        )
                    }
                }
            }
            if checks.len() > 1 {
                println!(
                    "verdicts agree across {} words: {}",
                    checks.len(),
                    yes_no(agree)
                );
            }
        }
        Format::Json => {
            let list: Vec<Value> = checks.iter().map(check_json).collect();
            print_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "homomesy",
                "n": n,
                "statistic": statistic.render(),
                "checks": list,
                "verdicts_agree": agree,
            }));
        }
        Format::Csv => {
            println!("word,verdict,constant,witness1,average1,witness2,average2");
            for check in &checks {
                match &check.verdict {
                    HomomesyVerdict::Homomesic { constant } => {
                        println!("\"{}\",homomesic,{},,,,", check.word, constant)
                    }
                    HomomesyVerdict::NotHomomesic { first, second } => println!(
                        "\"{}\",not-homomesic,,{},{},{},{}",
                        check.word,
                        first.0.min_state(),
                        first.1,
                        second.0.min_state(),
                        second.1,
                    ),
                }
            }
        }
    }
    Ok(all_homomesic && agree)
}

fn check_json(check: &HomomesyCheck) -> Value {
    match &check.verdict {
        HomomesyVerdict::Homomesic { constant } => json!({
            "word": check.word.letters(),
            "verdict": "homomesic",
            "constant": rat_str(*constant),
        }),
        HomomesyVerdict::NotHomomesic { first, second } => json!({
            "word": check.word.letters(),
            "verdict": "not-homomesic",
            "witnesses": [
                { "representative": first.0.min_state().to_string(),
                  "size": first.0.len(), "average": rat_str(first.1) },
                { "representative": second.0.min_state().to_string(),
                  "size": second.0.len(), "average": rat_str(second.1) },
            ],
        }),
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

// ---------------------------------------------------------------------------
// snakes
// ---------------------------------------------------------------------------

pub fn snakes(args: &SnakesArgs) -> CliResult {
    if let Some(range) = &args.sizes {
        return sizes_table_report(range, args.format);
    }
    let (orbit, view_start, composition) = match (&args.composition, &args.start) {
        (Some(text), None) => {
            let comp = SnakeComposition::parse(text)?;
            guard(comp.ambient_n(), args.max_n)?;
            let (orbit, seed) = reconstruct_orbit(&comp);
            (orbit, seed, Some(comp))
        }
        (None, Some(bits)) => {
            let state = IndependentSet::parse(bits)?;
            if let Some(n) = args.n {
                if n != state.n() {
                    return Err(pathtoggles::Error::Parse(format!(
                        "start state has {} positions but -n is {n}",
                        state.n()
                    )));
                }
            }
            guard(state.n(), args.max_n)?;
            let orbit = Orbit::orbit_of(&state, &ToggleWord::sweep(state.n()));
            (orbit, state, None)
        }
        _ => {
            return Err(pathtoggles::Error::Parse(
                "pass exactly one of --composition or --start".into(),
            ))
        }
    };

    let n = orbit.n();
    let board = orbit
        .board_from(&view_start)
        .expect("view start is in the orbit");
    let snakes = snake_decompose(&board)?;
    let class = snakes[0].composition().canonical();

    match args.format {
        Format::Text => {
            match &composition {
                Some(comp) => println!(
                    "composition {comp} on n = {n}: orbit size {} (formula {}, psi {})",
                    orbit.len(),
                    comp.orbit_size(),
                    comp.psi(),
                ),
                None => println!(
                    "sweep orbit of {view_start} on n = {n}: size {}, {} snakes",
                    orbit.len(),
                    snakes.len(),
                ),
            }
            print!("{}", board_text(&board, Some(&snakes)));
            println!("column sums: ({})", join_usize(&orbit.column_sums(), ","));
            let labels: Vec<String> = snakes
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    format!(
                        "{}={} (row {})",
                        snake_letter(i),
                        s.composition(),
                        s.start_row()
                    )
                })
                .collect();
            println!("snakes: {}", labels.join("  "));
            println!(
                "class {} reversible {} orbit reversible {}",
                class,
                yes_no(class.is_reversible_class()),
                yes_no(orbit.is_reversible()),
            );
        }
        Format::Json => {
            let snake_list: Vec<Value> = snakes
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    json!({
                        "letter": snake_letter(i).to_string(),
                        "start_row": s.start_row(),
                        "composition": s.composition().to_string(),
                    })
                })
                .collect();
            print_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "snakes",
                "n": n,
                "composition": composition.as_ref().map(|c| c.to_string()),
                "predicted_size": composition.as_ref().map(|c| c.orbit_size()),
                "psi": composition.as_ref().map(|c| c.psi()),
                "orbit": orbit.to_json(),
                "board_rows": board.rows().map(|r| r.to_string()).collect::<Vec<_>>(),
                "snakes": snake_list,
                "canonical_class": class.to_string(),
                "class_reversible": class.is_reversible_class(),
                "orbit_reversible": orbit.is_reversible(),
            }));
        }
        Format::Csv => {
            print!("{}", board.to_csv());
            println!();
            println!("snake,letter,start_row,composition");
            for (i, s) in snakes.iter().enumerate() {
                println!(
                    "{i},{},{},{}",
                    snake_letter(i),
                    s.start_row(),
                    s.composition()
                );
            }
        }
    }
    if let Some(comp) = &composition {
        return Ok(orbit.len() == comp.orbit_size());
    }
    Ok(true)
}

/// The classification of orbit sizes: which paths carry an orbit of each
/// size, one row per aperiodic class of the size into parts 2 and 3.
fn sizes_table_report(range: &str, format: Format) -> CliResult {
    let (lo, hi) = parse_range(range)?;
    let rows: Vec<_> = (lo..=hi)
        .flat_map(pathtoggles::snakes::sizes_table)
        .collect();
    match format {
        Format::Text => {
            println!("{:<6} {:<16} {:<18} exists for", "size", "class", "snakes");
            for row in &rows {
                let class = row
                    .class
                    .iter()
                    .map(u8::to_string)
                    .collect::<Vec<_>>()
                    .join("+");
                println!(
                    "{:<6} {:<16} {:<18} n = 1 (mod {})",
                    row.size,
                    class,
                    format!("({})*", row.snake_period),
                    row.modulus,
                );
            }
            for m in lo..=hi {
                if pathtoggles::snakes::sizes_table(m).is_empty() {
                    println!("{m:<6} none{:<28} no n", "");
                }
            }
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "size": row.size,
                        "class": row.class,
                        "snake_period": row.snake_period.to_string(),
                        "modulus": row.modulus,
                    })
                })
                .collect();
            print_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "snakes",
                "sizes": range,
                "rows": list,
            }));
        }
        Format::Csv => {
            println!("size,class,snake_period,modulus");
            for row in &rows {
                let class = row
                    .class
                    .iter()
                    .map(u8::to_string)
                    .collect::<Vec<_>>()
                    .join("+");
                println!(
                    "{},{},{},{}",
                    row.size, class, row.snake_period, row.modulus
                );
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

struct CountRow {
    family: &'static str,
    param: usize,
    formula: u128,
    oracle: u128,
}

fn parse_range(text: &str) -> Result<(usize, usize), pathtoggles::Error> {
    let bad = || pathtoggles::Error::Parse(format!("bad range {text:?}; use A..B or a single N"));
    if let Some((a, b)) = text.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| bad())?;
        let hi: usize = b.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let v: usize = text.trim().parse().map_err(|_| bad())?;
        Ok((v, v))
    }
}

pub fn count(args: &CountArgs) -> CliResult {
    type Pair = (
        fn(usize) -> pathtoggles::Result<u128>,
        fn(usize) -> pathtoggles::Result<u128>,
    );
    let families: [(&'static str, &Option<String>, Pair); 8] = [
        (
            "sets",
            &args.sets,
            (
                en::count_independent_sets,
                en::oracle_count_independent_sets,
            ),
        ),
        (
            "symmetrical",
            &args.symmetrical,
            (en::count_symmetrical, en::oracle_count_symmetrical),
        ),
        (
            "strings",
            &args.strings,
            (
                en::count_strings_no11_open,
                en::oracle_count_strings_no11_open,
            ),
        ),
        (
            "necklaces",
            &args.necklaces,
            (en::count_necklaces_no11, en::oracle_count_necklaces_no11),
        ),
        (
            "bracelets",
            &args.bracelets,
            (en::count_bracelets_no11, en::oracle_count_bracelets_no11),
        ),
        (
            "self-reverse",
            &args.self_reverse,
            (
                en::count_self_reverse_necklaces,
                en::oracle_count_self_reverse_necklaces,
            ),
        ),
        (
            "orbits",
            &args.orbits,
            (en::count_phi_orbits, en::oracle_count_phi_orbits),
        ),
        (
            "reversible",
            &args.reversible,
            (
                en::count_reversible_orbits,
                en::oracle_count_reversible_orbits,
            ),
        ),
    ];

    let mut rows: Vec<CountRow> = Vec::new();
    for (family, range, (formula, oracle)) in families {
        if let Some(range) = range {
            let (lo, hi) = parse_range(range)?;
            for param in lo..=hi {
                rows.push(CountRow {
                    family,
                    param,
                    formula: formula(param)?,
                    oracle: oracle(param)?,
                });
            }
        }
    }
    if rows.is_empty() {
        return Err(pathtoggles::Error::Parse(
            "pick at least one family, e.g. --orbits 2..16 or --necklaces 9".into(),
        ));
    }

    let all_match = rows.iter().all(|r| r.formula == r.oracle);
    match args.format {
        Format::Text => {
            println!(
                "{:<14} {:>5} {:>14} {:>14}  match",
                "family", "param", "formula", "oracle"
            );
            for r in &rows {
                println!(
                    "{:<14} {:>5} {:>14} {:>14}  {}",
                    r.family,
                    r.param,
                    r.formula,
                    r.oracle,
                    yes_no(r.formula == r.oracle)
                );
            }
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "family": r.family,
                        "param": r.param,
                        "formula": r.formula.to_string(),
                        "oracle": r.oracle.to_string(),
                        "match": r.formula == r.oracle,
                    })
                })
                .collect();
            print_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "count",
                "rows": list,
                "all_match": all_match,
            }));
        }
        Format::Csv => {
            println!("family,param,formula,oracle,match");
            for r in &rows {
                println!(
                    "{},{},{},{},{}",
                    r.family,
                    r.param,
                    r.formula,
                    r.oracle,
                    r.formula == r.oracle
                );
            }
        }
    }
    Ok(all_match)
}

// ---------------------------------------------------------------------------
// conjugate
// ---------------------------------------------------------------------------

pub fn conjugate(args: &ConjugateArgs) -> CliResult {
    let n = args.common.n;
    guard(n, args.common.max_n)?;
    let word = CoxeterWord::parse(n, &args.word)?;
    let path = path_to_sweep(&word)?;

    // Verify u^-1 w u = sweep on every state.
    let u = &path.conjugator;
    let conjugated = u.inverse().then_left(word.word())?.then_left(u)?;
    let sweep = ToggleWord::sweep(n);
    let verified = enumerate_independent_sets_with_limit(n, args.common.max_n)?
        .iter()
        .all(|s| conjugated.apply(s) == sweep.apply(s));

    match args.common.format {
        Format::Text => {
            println!("w = {word}   {}", word.orientation().ascii());
            for step in &path.steps {
                println!(
                    "conj by t{} -> {}   {}",
                    step.toggle,
                    step.word_after,
                    step.orientation_after().ascii(),
                );
            }
            println!(
                "conjugator u = {}",
                if u.is_empty() {
                    "(identity)".into()
                } else {
                    u.to_string()
                }
            );
            println!("sweep = u^-1 w u on all states: {}", yes_no(verified));
        }
        Format::Json => {
            let steps: Vec<Value> = path
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "toggle": s.toggle,
                        "word_before": s.word_before.letters(),
                        "word_after": s.word_after.letters(),
                        "orientation_after": s.orientation_after().ascii(),
                    })
                })
                .collect();
            print_json(&json!({
                "schema_version": SCHEMA_VERSION,
                "command": "conjugate",
                "n": n,
                "word": word.letters(),
                "steps": steps,
                "conjugator": u.letters(),
                "verified": verified,
            }));
        }
        Format::Csv => {
            println!("step,toggle,word_after,orientation_after");
            for (i, s) in path.steps.iter().enumerate() {
                println!(
                    "{i},{},\"{}\",{}",
                    s.toggle,
                    s.word_after,
                    s.orientation_after().ascii()
                );
            }
        }
    }
    Ok(verified)
}

// ---------------------------------------------------------------------------
// zigzag
// ---------------------------------------------------------------------------

fn parse_ideal_word(n: usize, spec: &str) -> Result<ToggleWord, pathtoggles::Error> {
    match spec.trim().to_ascii_lowercase().as_str() {
        "pro" => Ok(promotion_word(n)),
        "row" => Ok(rowmotion_word(n)),
        other => ToggleWord::parse(n, other),
    }
}

pub fn zigzag(args: &ZigzagArgs) -> CliResult {
    let n = args.common.n;
    guard(n, args.common.max_n)?;
    let word = parse_ideal_word(n, &args.word)?;
    let run_orbits =
        args.orbits || (!args.check_eta && !args.empty_orbit && args.homomesy.is_none());

    let mut ok = true;
    let mut sections: Vec<Value> = Vec::new();
    let text = args.common.format == Format::Text;
    let csv = args.common.format == Format::Csv;

    if args.check_eta {
        let pairs = verify_eta_equivariance(n)?;
        if text {
            println!("bijection equivariance: verified on {pairs} (state, toggle) pairs");
        } else if csv {
            println!("check,result,detail");
            println!("eta-equivariance,pass,{pairs}");
        } else {
            sections.push(json!({ "check": "eta_equivariance", "pairs": pairs, "pass": true }));
        }
    }

    if run_orbits {
        let ideal_orbits = all_ideal_orbits_with_limit(n, &word, args.common.max_n)?;
        let mut sizes: Vec<usize> = ideal_orbits.iter().map(|o| o.len()).collect();
        sizes.sort_unstable();
        let mut sweep_sizes: Vec<usize> = all_orbits_parallel_with_limit(
            n,
            &ToggleWord::sweep(n),
            args.common.threads.max(1),
            args.common.max_n,
        )?
        .iter()
        .map(Orbit::len)
        .collect();
        sweep_sizes.sort_unstable();
        let matches = sizes == sweep_sizes;
        ok &= matches;
        if text {
            println!(
                "{} ideal orbits under {word}; sizes {:?}",
                ideal_orbits.len(),
                sizes
            );
            for (idx, orbit) in ideal_orbits.iter().enumerate() {
                println!(
                    "orbit {idx}: size {} rep {} sums ({})",
                    orbit.len(),
                    orbit.min_state(),
                    join_usize(&orbit.column_sums(), ","),
                );
            }
            println!(
                "orbit size multiset matches the sweep's: {}",
                yes_no(matches)
            );
        } else if csv {
            println!("orbit,size,representative,column_sums");
            for (idx, orbit) in ideal_orbits.iter().enumerate() {
                println!(
                    "{idx},{},{},{}",
                    orbit.len(),
                    orbit.min_state(),
                    join_usize(&orbit.column_sums(), ";")
                );
            }
            println!();
            println!("check,result,detail");
            println!(
                "sizes-match-sweep,{},",
                if matches { "pass" } else { "fail" }
            );
        } else {
            let list: Vec<Value> = ideal_orbits
                .iter()
                .map(|o| {
                    json!({
                        "size": o.len(),
                        "representative": o.min_state().to_string(),
                        "column_sums": o.column_sums(),
                    })
                })
                .collect();
            sections.push(json!({
                "check": "orbits",
                "orbits": list,
                "sizes_match_sweep": matches,
            }));
        }
    }

    if args.empty_orbit {
        let orbit = ideal_orbit_of(&OrderIdeal::empty(n)?, &word);
        if text {
            println!(
                "orbit of the empty ideal under {word}: size {}",
                orbit.len()
            );
            for ideal in orbit.states() {
                println!("  {ideal}");
                for line in ideal.render().lines() {
                    println!("    {line}");
                }
            }
        } else if csv {
            println!("empty_orbit_state");
            for ideal in orbit.states() {
                println!("{ideal}");
            }
        } else {
            sections.push(json!({
                "check": "empty_orbit",
                "size": orbit.len(),
                "states": orbit.states().iter().map(|i| i.to_string()).collect::<Vec<_>>(),
            }));
        }
    }

    if let Some(stat_text) = &args.homomesy {
        let statistic = Statistic::parse(n, stat_text)?;
        let mut checks = vec![(word.clone(), check_ideal_homomesy(n, &word, &statistic)?)];
        for w in random_coxeter_words(n, args.random_words, args.common.seed) {
            let w = w.into_word();
            checks.push((w.clone(), check_ideal_homomesy(n, &w, &statistic)?));
        }
        let agree = checks
            .iter()
            .all(|(_, v)| v.constant() == checks[0].1.constant());
        let homomesic = checks.iter().all(|(_, v)| v.is_homomesic());
        ok &= homomesic && agree;
        if text {
            for (w, verdict) in &checks {
                match verdict {
                    HomomesyVerdict::Homomesic { constant } => {
                        println!("word {w}: {} is {constant}-mesic on ideals", statistic.render())
                    }
                    HomomesyVerdict::NotHomomesic { first, second } => println!(
                        "word {w}: {} not homomesic (orbit at {} averages {}, orbit at {} averages {})",
                        statistic.render(),
                        first.0.min_state(),
                        first.1,
                        second.0.min_state(),
                        second.1,
                    ),
                }
            }
            if checks.len() > 1 {
                println!(
                    "verdicts agree across {} words: {}",
                    checks.len(),
                    yes_no(agree)
                );
            }
        } else if csv {
            println!("word,verdict,constant");
            for (w, verdict) in &checks {
                match verdict {
                    HomomesyVerdict::Homomesic { constant } => {
                        println!("\"{w}\",homomesic,{constant}")
                    }
                    HomomesyVerdict::NotHomomesic { .. } => println!("\"{w}\",not-homomesic,"),
                }
            }
        } else {
            let list: Vec<Value> = checks
                .iter()
                .map(|(w, verdict)| match verdict {
                    HomomesyVerdict::Homomesic { constant } => json!({
                        "word": w.letters(), "verdict": "homomesic", "constant": rat_str(*constant),
                    }),
                    HomomesyVerdict::NotHomomesic { first, second } => json!({
                        "word": w.letters(),
                        "verdict": "not-homomesic",
                        "witnesses": [
                            { "representative": first.0.min_state().to_string(), "average": rat_str(first.1) },
                            { "representative": second.0.min_state().to_string(), "average": rat_str(second.1) },
                        ],
                    }),
                })
                .collect();
            sections.push(json!({
                "check": "homomesy",
                "statistic": statistic.render(),
                "checks": list,
                "verdicts_agree": agree,
            }));
        }
    }

    if args.common.format == Format::Json {
        print_json(&json!({
            "schema_version": SCHEMA_VERSION,
            "command": "zigzag",
            "n": n,
            "word": word.letters(),
            "sections": sections,
            "pass": ok,
        }));
    }
    Ok(ok)
}
