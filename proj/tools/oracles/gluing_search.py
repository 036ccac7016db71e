"""Independent check of the (3,3) catalog: solve the splice relations by least squares from random
starts, keep irreducible solutions whose restrictions are nonabelian, and cluster them by traces.

usage: python3 gluing_search.py [trials]    (needs numpy and scipy; about 25 s per trial)
"""
import numpy as np, scipy.linalg as sl
from scipy.optimize import least_squares
rng=np.random.default_rng(1)
q1=q2=3
def u2(p):
    a,b,c,d=p; H=np.array([[1j*a, b+1j*c],[-b+1j*c, 1j*d]]); return sl.expm(H)
def su3(p):
    H=np.zeros((3,3),complex); idx=0
    H[0,0]=1j*p[0];H[1,1]=1j*p[1];H[2,2]=-1j*(p[0]+p[1])
    k=2
    for i in range(3):
        for j in range(i+1,3):
            H[i,j]=p[k]+1j*p[k+1];H[j,i]=-p[k]+1j*p[k+1];k+=2
    return sl.expm(H)
def left(U): M=np.zeros((3,3),complex);M[:2,:2]=U;M[2,2]=1/np.linalg.det(U);return M
def right(U): M=np.zeros((3,3),complex);M[1:,1:]=U;M[0,0]=1/np.linalg.det(U);return M
mp=np.linalg.matrix_power
inv=np.linalg.inv
def words(X,Y,q):
    mu=X@mp(Y,(1-q)//2) if (1-q)//2>=0 else X@mp(inv(Y),(q-1)//2)
    lam=X@X@mp(inv(mu),2*q)
    return mu,lam
def build(p):
    X1=left(u2(p[0:4]));Y1=left(u2(p[4:8]))
    g=su3(p[16:24])
    X2=g@right(u2(p[8:12]))@g.conj().T;Y2=g@right(u2(p[12:16]))@g.conj().T
    return X1,Y1,X2,Y2
def res(p):
    X1,Y1,X2,Y2=build(p)
    m1,l1=words(X1,Y1,q1);m2,l2=words(X2,Y2,q2)
    r=[X1@X1-mp(Y1,q1),X2@X2-mp(Y2,q2),m1-l2,l1-m2]
    return np.concatenate([np.concatenate([z.real.ravel(),z.imag.ravel()]) for z in r])
def comm_dim(ms):
    rows=[]
    basis=[]
    for i in range(3):
        for j in range(3):
            for part in (1,1j):
                E=np.zeros((3,3),complex)
                if i==j:
                    if part==1: continue
                    E[i,i]=1j
                elif i<j:
                    E[i,j]=part;E[j,i]=-np.conj(part)
                else: continue
                basis.append(E)
    A=np.array([np.concatenate([np.concatenate([(E@M-M@E).real.ravel(),(E@M-M@E).imag.ravel()]) for M in ms]) for E in basis]).T
    s=np.linalg.svd(A,compute_uv=False)
    return len(basis)-np.sum(s>max(1e-7*s[0],1e-10))
sigs=[]
import sys
trials=int(sys.argv[1]) if len(sys.argv)>1 else 120
for trial in range(trials):
    p0=rng.normal(size=24)*2
    r=least_squares(res,p0,xtol=1e-15,ftol=1e-15,gtol=1e-15,max_nfev=800)
    if np.linalg.norm(r.fun)>1e-9: continue
    X1,Y1,X2,Y2=build(r.x)
    if comm_dim([X1,Y1,X2,Y2])!=1: continue
    if comm_dim([X1,Y1])>=3 or comm_dim([X2,Y2])>=3: continue  # require nonabelian restrictions
    ws=[X1,Y1,X2,Y2,X1@X2,X1@Y2,Y1@X2,X1@Y1@X2@Y2,X1@X2@Y1@Y2,Y1@Y2]
    sig=np.array([np.trace(w) for w in ws])
    sigs.append(sig)

cl=[]
for v in sigs:
    for c in cl:
        if np.linalg.norm(c[0]-v)<1e-5: c.append(v); break
    else: cl.append([v])
print(len(sigs),"solutions",len(cl),"clusters")
for c in cl:
    print(len(c), np.round(c[0][4:8],6), "spread", max(np.linalg.norm(x-c[0]) for x in c))
