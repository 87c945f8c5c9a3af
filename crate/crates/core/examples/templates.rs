//! Templates, p-implementations, and the reduction to short templates.

use regsep::template::{
    incompatible_piece_exists, is_p_implementation, is_unambiguous_template,
    reduce_to_short_template, template_piece, Template,
};
use regsep::{symbol::render_word, word};

fn main() -> regsep::Result<()> {
    for s in ["a,{b,c},d,{a}", "b,{b,c},d,{a}", "a,{b,c},{c},{a}"] {
        let t: Template = s.parse()?;
        println!("{t}: unambiguous = {}", is_unambiguous_template(&t));
    }
    let t: Template = "a,{b,c},d,{a}".parse()?;
    let w = word("abccbbcbdaaaa");
    for p in 1..=3 {
        match is_p_implementation(&w, &t, p) {
            Some(i) => {
                let f: Vec<String> = i.factors(&w).iter().map(|f| render_word(f)).collect();
                println!("p={p}: {}", f.join(" | "));
            }
            None => println!("p={p}: no"),
        }
    }
    println!("template piece at p=2: {}", render_word(&template_piece(&t, 2).concat()));
    let short: Template = "a,{b,c},d".parse()?;
    for w in ["abccbd", "axbcd"] {
        println!("{w} has a piece incompatible with {short}: {}", incompatible_piece_exists(&word(w), &short));
    }
    let long = word("abababababbbbbcacacacacaca");
    println!("reduction of {}: {}", render_word(&long), reduce_to_short_template(&long, 1));
    Ok(())
}
