"""Determining functions and reduced constraints as sympy expressions in f(x), g(x)."""
import sympy as sp
x=sp.symbols('x')
F=sp.Function('f')(x); G=sp.Function('g')(x)
def D(e,k=1): return sp.diff(e,x,k)
def H(f,g):
    f1,f2,f3,f4,f5=[D(f,k) for k in range(1,6)]
    g1,g2,g3,g4,g5,g6=[D(g,k) for k in range(1,7)]
    H11=(6*f1**2/f-6*g*f1**3/(f**2*g1)-8*f2+10*g*f1*f2/(f*g1)-6*g*f1**2*g2/(f*g1**2)+8*g*f2*g2/g1**2+30*f*g2**2/g1**2
        -60*f*g*g2**3/g1**4-4*g*f3/g1-20*f*g3/g1+60*f*g*g2*g3/g1**3-10*f*g*g4/g1**2)
    H12=(-6*f1**3/(f**2*g1)+10*f1*f2/(f*g1)-6*f1**2*g2/(f*g1**2)+8*f2*g2/g1**2-60*f*g2**3/g1**4-4*f3/g1+60*f*g2*g3/g1**3
        -10*f*g4/g1**2)
    H21=(12*f1**4/f**3-12*g*f1**5/(f**4*g1)-28*f1**2*f2/f**2+34*g*f1**3*f2/(f**3*g1)+10*f2**2/f-21*g*f1*f2**2/(f**2*g1)
        -12*g*f1**4*g2/(f**3*g1**2)+6*f1**3*g2/(f**2*g1)+28*g*f1**2*f2*g2/(f**2*g1**2)-11*f1*f2*g2/(f*g1)-10*g*f2**2*g2/(f*g1**2)
        -12*g*f1**3*g2**2/(f**2*g1**3)+6*f1**2*g2**2/(f*g1**2)+22*g*f1*f2*g2**2/(f*g1**3)-3*f2*g2**2/g1**2-12*g*f1**2*g2**3/(f*g1**4)
        -60*f1*g2**3/g1**3+6*g*f2*g2**3/g1**4+120*g*f1*g2**4/g1**5+180*f*g2**4/g1**4-360*f*g*g2**5/g1**6
        +10*f1*f3/f-12*g*f1**2*f3/(f**2*g1)+9*g*f2*f3/(f*g1)-10*g*f1*g2*f3/(f*g1**2)+6*g2*f3/g1
        -12*g*g2**2*f3/g1**3+6*g*f1**3*g3/(f**2*g1**2)-4*f1**2*g3/(f*g1)-11*g*f1*f2*g3/(f*g1**2)+2*f2*g3/g1
        +12*g*f1**2*g2*g3/(f*g1**3)+70*f1*g2*g3/g1**2-6*g*f2*g2*g3/g1**3-180*g*f1*g2**2*g3/g1**4
        -300*f*g2**2*g3/g1**3+720*f*g*g2**3*g3/g1**5+6*g*f3*g3/g1**2+30*g*f1*g3**2/g1**3
        +60*f*g3**2/g1**2-270*f*g*g2*g3**2/g1**4-4*f4+3*g*f1*f4/(f*g1)+4*g*g2*f4/g1**2
        -2*g*f1**2*g4/(f*g1**2)-15*f1*g4/g1+g*f2*g4/g1**2+40*g*f1*g2*g4/g1**3+75*f*g2*g4/g1**2
        -180*f*g*g2**2*g4/g1**4+60*f*g*g3*g4/g1**3-g*f5/g1-5*g*f1*g5/g1**2-12*f*g5/g1
        +30*f*g*g2*g5/g1**3-3*f*g*g6/g1**2)
    H22=(-12*f1**5/(f**4*g1)+34*f1**3*f2/(f**3*g1)-21*f1*f2**2/(f**2*g1)-12*f1**4*g2/(f**3*g1**2)+28*f1**2*f2*g2/(f**2*g1**2)
        -10*f2**2*g2/(f*g1**2)-12*f1**3*g2**2/(f**2*g1**3)+22*f1*f2*g2**2/(f*g1**3)-12*f1**2*g2**3/(f*g1**4)+6*f2*g2**3/g1**4
        +120*f1*g2**4/g1**5-360*f*g2**5/g1**6-12*f1**2*f3/(f**2*g1)+9*f2*f3/(f*g1)-10*f1*g2*f3/(f*g1**2)
        -12*g2**2*f3/g1**3+6*f1**3*g3/(f**2*g1**2)-11*f1*f2*g3/(f*g1**2)+12*f1**2*g2*g3/(f*g1**3)-6*f2*g2*g3/g1**3
        -180*f1*g2**2*g3/g1**4+720*f*g2**3*g3/g1**5+6*f3*g3/g1**2+30*f1*g3**2/g1**3
        -270*f*g2*g3**2/g1**4+3*f1*f4/(f*g1)+4*g2*f4/g1**2-2*f1**2*g4/(f*g1**2)+f2*g4/g1**2+40*f1*g2*g4/g1**3
        -180*f*g2**2*g4/g1**4+60*f*g3*g4/g1**3-f5/g1-5*f1*g5/g1**2+30*f*g2*g5/g1**3-3*f*g6/g1**2)
    return H11,H12,H21,H22
def R(f,g):
    f1,f2,f3,f4,f5=[D(f,k) for k in range(1,6)]
    g1,g2,g3,g4=[D(g,k) for k in range(1,5)]
    R1=g3-(sp.Rational(3,10)*g1*f1**2/f**2-sp.Rational(2,5)*g1*f2/f+sp.Rational(3,2)*g2**2/g1)
    R2=f4-(f1*f3/f+sp.Rational(11,10)*f2**2/f-sp.Rational(12,5)*f1**2*f2/f**2+sp.Rational(9,10)*f1**4/f**3)
    R3=g4-(6*g2*g3/g1-2*g1*g3/g-sp.Rational(2,5)*g1*f3/f+6*g2**3/g1**2+3*g2**2/g+sp.Rational(4,5)*g2*f2/f
        -sp.Rational(3,5)*f1**2*g2/g+g1*f1*f2/f-sp.Rational(4,5)*g1**2*f2/(g*f)-sp.Rational(3,5)*g1*f1**3/f**3+sp.Rational(3,5)*g1**2*f1**2/(f**2*g))
    R4=f5-(-sp.Rational(18,5)*f1**5/f**4+sp.Rational(18,5)*f1**4*g1/(f**3*g)+sp.Rational(54,5)*f1**3*f2/f**3-sp.Rational(48,5)*f1**2*g1*f2/(f**2*g)
        -7*f1*f2**2/f**2+sp.Rational(22,5)*g1*f2**2/(f*g)-sp.Rational(18,5)*f1**4*g2/(f**3*g1)+sp.Rational(48,5)*f1**2*f2*g2/(f**2*g1)
        -sp.Rational(22,5)*f2**2*g2/(f*g1)-sp.Rational(22,5)*f1**2*f3/f**2+4*f1*g1*f3/(f*g)+sp.Rational(16,5)*f2*f3/f
        -4*f1*g2*f3/(f*g1)+2*f1*f4/f-4*g1*f4/g+4*g2*f4/g1)
    R5=g4-(-sp.Rational(3,5)*f1**3*g1/f**3+f1*g1*f2/f**2-sp.Rational(3,5)*f1**2*g2/f**2+sp.Rational(4,5)*f2*g2/f
        -6*g2**3/g1**2-sp.Rational(2,5)*g1*f3/f+6*g2*g3/g1)
    R6=f5-(-sp.Rational(18,5)*f1**5/f**4+sp.Rational(54,5)*f1**3*f2/f**3-7*f1*f2**2/f**2-sp.Rational(18,5)*f1**4*g2/(f**3*g1)
        +sp.Rational(48,5)*f1**2*f2*g2/(f**2*g1)-sp.Rational(22,5)*f2**2*g2/(f*g1)-sp.Rational(22,5)*f1**2*f3/f**2
        +sp.Rational(16,5)*f2*f3/f-4*f1*g2*f3/(f*g1)+2*f1*f4/f+4*g2*f4/g1)
    return R1,R2,R3,R4,R5,R6
