#include <chrono>
#include <iostream>
#include <random>
#include "oracle.hpp"
#include "rcgp/pipeline.hpp"
#include "rcgp/rcg.hpp"
using namespace rcgp;
using Clock = std::chrono::steady_clock;
double secs(Clock::time_point t0){return std::chrono::duration<double>(Clock::now()-t0).count();}
int main(){
  std::mt19937 rng(20080823);
  double tAnchor=0,tFilter=0,tConvert=0,tParse=0,tInterp=0,tOracle=0,tAll=0;
  long sets=0,strings=0,clauses=0;
  auto T=Clock::now();
  for(int gi=0;gi<200;++gi){
    auto rt=oracle::random_tag(rng, gi%2==0);
    auto t0=Clock::now();
    auto orc=oracle::enumerate_tag(rt.oracleTrees,"S",6);
    tOracle+=secs(t0);
    std::vector<std::vector<std::string>> all={{}};
    std::vector<std::vector<std::string>> frontier={{}};
    for(int len=1;len<=6;++len){std::vector<std::vector<std::string>> next;
      for(auto&p:frontier)for(auto&w:rt.alphabet){auto s=p;s.push_back(w);next.push_back(s);all.push_back(s);} frontier=std::move(next);}
    for(auto&toks:all){
      ++strings;
      ParseRequest req; req.maxDerivations=100000;
      std::string s; for(size_t i=0;i<toks.size();++i){if(i)s+=' ';s+=toks[i];} req.sentence=s;
      auto r1=run_parse(req,rt.grammar,rt.lexicon);
      tAnchor+=r1.timingMs.at("anchor")/1000.0;
      tFilter+=r1.timingMs.at("filter")/1000.0;
      tConvert+=r1.timingMs.at("convert")/1000.0;
      tParse+=r1.timingMs.at("parse")/1000.0;
      tInterp+=r1.timingMs.at("interpret")/1000.0;
      sets+=r1.sets.size();
      req.noFilter=true;
      auto r2=run_parse(req,rt.grammar,rt.lexicon);
      tAnchor+=r2.timingMs.at("anchor")/1000.0;
      tFilter+=r2.timingMs.at("filter")/1000.0;
      tConvert+=r2.timingMs.at("convert")/1000.0;
      tParse+=r2.timingMs.at("parse")/1000.0;
      tInterp+=r2.timingMs.at("interpret")/1000.0;
      sets+=r2.sets.size();
    }
  }
  tAll=secs(T);
  std::cout<<"total="<<tAll<<" oracle="<<tOracle<<" anchor="<<tAnchor<<" filter="<<tFilter
           <<" convert="<<tConvert<<" parse="<<tParse<<" interpret="<<tInterp
           <<" sets="<<sets<<" strings="<<strings<<"\n";
  return 0;
}
