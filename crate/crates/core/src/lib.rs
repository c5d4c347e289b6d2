use rug::{Integer, Rational};
pub fn demo() -> Rational {
    let a = Rational::from((1, 3));
    let b = Rational::from((1, 6));
    let f = Integer::from(Rational::from(&a + &b).floor_ref());
    Rational::from(f) + a
}
